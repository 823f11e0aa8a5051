#include "ks/generators.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "ks/verifier.hpp"

namespace ks {

namespace {

bool contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// Accumulates the growing basis collection of one algorithm run.
class Growth {
 public:
  explicit Growth(const BasisTable& table) : table_(table) {}

  bool has(int id) const { return present_ & (std::uint32_t{1} << (id - 1)); }

  // Adds the bases not yet present, in the given order; returns them.
  std::vector<int> add_missing(const std::vector<int>& ids) {
    std::vector<int> added;
    for (int id : ids) {
      if (has(id)) continue;
      present_ |= std::uint32_t{1} << (id - 1);
      order_.push_back(id);
      for (int r : table_.basis(id).rays) ++mult_[static_cast<std::size_t>(r)];
      added.push_back(id);
    }
    return added;
  }

  // Hybrid bases containing `ray` that are not yet in the collection.
  std::vector<int> missing_hybrids(int ray) const {
    std::vector<int> out;
    for (int b : table_.bases_containing(ray))
      if (b > kNumPureBases && !has(b)) out.push_back(b);
    return out;
  }

  int multiplicity(int ray) const { return mult_[static_cast<std::size_t>(ray)]; }
  const std::vector<int>& order() const { return order_; }
  const BasisTable& table() const { return table_; }

 private:
  const BasisTable& table_;
  std::vector<int> order_;
  std::uint32_t present_ = 0;
  MultiplicityProfile mult_{};
};

void require(bool ok, const char* what) {
  if (!ok) throw StructureError(what);
}

KsSet finish(const Growth& gw, std::vector<int> sigma, std::vector<int> step_counts,
             const Signature& expected) {
  ParityCertificate cert = verify_parity(gw.table(), gw.order());
  require(cert.valid && cert.signature, "generated collection is not a parity proof");
  require(*cert.signature == expected, "generated collection has unexpected signature");
  KsSet ks;
  ks.basis_ids = cert.basis_ids;
  ks.sigma = std::move(sigma);
  ks.signature = *cert.signature;
  ks.generation_order = gw.order();
  ks.step_new_bases = std::move(step_counts);
  return ks;
}

// A first-step lambda set, keyed by the hybrid basis it came from.
using LambdaMap = std::map<int, std::vector<int>>;

std::vector<int> delta_of(const BasisTable& table, const std::vector<int>& lambda,
                          const std::vector<int>& new_hybrids) {
  std::vector<int> delta;
  for (int r : lambda)
    for (int h : new_hybrids)
      if (table.basis(h).contains(r)) {
        delta.push_back(r);
        break;
      }
  return delta;
}

}  // namespace

KsSet run_algorithm_I(const BasisTable& table, const GammaTable& gammas, const ChoiceI& c) {
  const GammaSet& g = gammas.at(c.gamma.pb, c.gamma.slot);
  Growth gw(table);
  std::vector<int> sigma(g.rays.begin(), g.rays.end());
  std::vector<int> steps;

  // Step 1: the gamma set brings its pure basis and four hybrids.
  std::vector<int> base = gw.add_missing(generated_bases(table, g).all());
  steps.push_back(static_cast<int>(base.size()));
  LambdaMap lambda1 = lambda_sets(table, gw.order());

  // Step 2: sigma5 from one of the lambda sets; its other hybrids are new.
  int host = 0;
  for (const auto& [h, rays] : lambda1)
    if (contains(rays, c.sigma5)) host = h;
  if (host == 0)
    throw InvalidChoice("sigma5 (" + std::to_string(c.sigma5) +
                        ") does not lie in any first-step lambda set");
  std::vector<int> new2 = gw.add_missing(gw.missing_hybrids(c.sigma5));
  require(new2.size() == 3, "step 2 must add exactly 3 new hybrid bases");
  steps.push_back(3);
  sigma.push_back(c.sigma5);

  // The two rays of each remaining lambda set that recur in the new hybrids.
  std::map<int, std::vector<int>> delta;
  for (const auto& [h, rays] : lambda1) {
    if (h == host) continue;
    std::vector<int> d = delta_of(table, rays, new2);
    require(d.size() == 2, "each delta set must have exactly 2 rays");
    delta[h] = std::move(d);
  }

  // Step 3: sigma6 from one delta pair; two hybrids are new.
  int picked = 0;
  for (const auto& [h, d] : delta)
    if (contains(d, c.sigma6)) picked = h;
  if (picked == 0)
    throw InvalidChoice("sigma6 (" + std::to_string(c.sigma6) +
                        ") does not lie in any delta set");
  std::vector<int> new3 = gw.add_missing(gw.missing_hybrids(c.sigma6));
  require(new3.size() == 2, "step 3 must add exactly 2 new hybrid bases");
  steps.push_back(2);
  sigma.push_back(c.sigma6);
  delta.erase(picked);

  // Step 4: in the next delta pair, exactly one ray completes with a single
  // new hybrid; the ray needing more is not eligible.
  {
    const std::vector<int>& d = delta.begin()->second;
    int chosen = 0;
    int candidates = 0;
    for (int r : d)
      if (gw.missing_hybrids(r).size() == 1) {
        chosen = r;
        ++candidates;
      }
    require(candidates == 1, "step 4 expects a unique ray adding exactly one new hybrid");
    std::vector<int> new4 = gw.add_missing(gw.missing_hybrids(chosen));
    require(new4.size() == 1, "step 4 must add exactly 1 new hybrid basis");
    steps.push_back(1);
    sigma.push_back(chosen);
    delta.erase(delta.begin());
  }

  // Step 5: the last delta pair holds one ray already at multiplicity 4.
  {
    const std::vector<int>& d = delta.begin()->second;
    int chosen = 0;
    int candidates = 0;
    for (int r : d)
      if (gw.multiplicity(r) == 4) {
        chosen = r;
        ++candidates;
      }
    require(candidates == 1, "step 5 expects a unique ray already occurring 4 times");
    require(gw.missing_hybrids(chosen).empty(), "step 5 must add no new basis");
    steps.push_back(0);
    sigma.push_back(chosen);
  }

  require(gw.order().size() == 11, "algorithm I must end with 11 bases");
  return finish(gw, std::move(sigma), std::move(steps), Signature{28, 8, 11});
}

namespace {

// State after the three shared steps of Algorithms II and III.
struct CommonState {
  Growth gw;
  std::vector<int> sigma;
  std::vector<int> steps;
  // Surviving lambda sets: family 1 and 2 keep two sets each after the
  // third gamma retires one pair, family 3 is born in step 3.
  struct Survivor {
    int family;  // 1, 2 or 3
    int hybrid;
    std::vector<int> rays;
  };
  std::vector<Survivor> surviving;
};

struct XiPair {
  int lambda1_hybrid;
  int lambda2_hybrid;
  std::vector<int> xi;          // 2 rays
  std::vector<int> ray_union;   // lambda1 ∪ lambda2, 6 rays
};

int intersection_size(const std::vector<int>& sorted, const std::array<int, 4>& rays) {
  int n = 0;
  for (int r : rays)
    if (std::binary_search(sorted.begin(), sorted.end(), r)) ++n;
  return n;
}

std::vector<XiPair> xi_pairs(const LambdaMap& lambda1, int host, const LambdaMap& lambda2) {
  std::vector<XiPair> pairs;
  for (const auto& [i, rays1] : lambda1) {
    if (i == host) continue;
    for (const auto& [j, rays2] : lambda2) {
      std::vector<int> inter;
      std::set_intersection(rays1.begin(), rays1.end(), rays2.begin(), rays2.end(),
                            std::back_inserter(inter));
      if (inter.empty()) continue;
      require(inter.size() == 2, "xi sets must have exactly 2 rays");
      XiPair p;
      p.lambda1_hybrid = i;
      p.lambda2_hybrid = j;
      p.xi = std::move(inter);
      std::set_union(rays1.begin(), rays1.end(), rays2.begin(), rays2.end(),
                     std::back_inserter(p.ray_union));
      pairs.push_back(std::move(p));
    }
  }
  require(pairs.size() == 3, "expected exactly 3 nonempty xi pairings");
  return pairs;
}

bool gamma_fits_pair(const GammaSet& g, const XiPair& p) {
  for (int r : p.xi)
    if (!g.contains(r)) return false;
  for (int r : g.rays)
    if (!std::binary_search(p.ray_union.begin(), p.ray_union.end(), r)) return false;
  return true;
}

CommonState run_common_steps(const BasisTable& table, const GammaTable& gammas,
                             const ChoiceII& c) {
  const GammaSet& g1 = gammas.at(c.gamma1.pb, c.gamma1.slot);
  const GammaSet& g2 = gammas.at(c.gamma2.pb, c.gamma2.slot);
  const GammaSet& g3 = gammas.at(c.gamma3.pb, c.gamma3.slot);
  if (g1.pb == g2.pb || g1.pb == g3.pb || g2.pb == g3.pb)
    throw InvalidChoice("the three gamma sets must come from distinct pure bases");

  CommonState st{Growth(table), {}, {}, {}};
  st.sigma.assign(g1.rays.begin(), g1.rays.end());

  // Step 1.
  std::vector<int> base = st.gw.add_missing(generated_bases(table, g1).all());
  st.steps.push_back(static_cast<int>(base.size()));
  LambdaMap lambda1 = lambda_sets(table, st.gw.order());

  // Step 2: the second gamma set must extend three rays of one lambda set.
  int host = 0;
  for (const auto& [h, rays] : lambda1)
    if (intersection_size(rays, g2.rays) == 3) host = h;
  if (host == 0)
    throw InvalidChoice("second gamma set does not extend three rays of any "
                        "first-step lambda set");
  std::vector<int> new2 = st.gw.add_missing(generated_bases(table, g2).all());
  require(new2.size() == 4 && new2.front() == g2.pb,
          "step 2 must add its pure basis and exactly 3 new hybrids");
  st.steps.push_back(4);
  st.sigma.insert(st.sigma.end(), g2.rays.begin(), g2.rays.end());
  LambdaMap lambda2 = lambda_sets(table, new2);

  // Step 3: the third gamma set is built on one xi pair.
  std::vector<XiPair> pairs = xi_pairs(lambda1, host, lambda2);
  const XiPair* chosen = nullptr;
  for (const XiPair& p : pairs)
    if (gamma_fits_pair(g3, p)) chosen = &p;
  if (chosen == nullptr)
    throw InvalidChoice("third gamma set does not combine any xi set with rays "
                        "of its complement");
  std::vector<int> new3 = st.gw.add_missing(generated_bases(table, g3).all());
  require(new3.size() == 3 && new3.front() == g3.pb,
          "step 3 must add its pure basis and exactly 2 new hybrids");
  st.steps.push_back(3);
  st.sigma.insert(st.sigma.end(), g3.rays.begin(), g3.rays.end());
  LambdaMap lambda3 = lambda_sets(table, new3);

  for (const auto& [h, rays] : lambda1)
    if (h != host && h != chosen->lambda1_hybrid)
      st.surviving.push_back({1, h, rays});
  for (const auto& [h, rays] : lambda2)
    if (h != chosen->lambda2_hybrid) st.surviving.push_back({2, h, rays});
  for (const auto& [h, rays] : lambda3) st.surviving.push_back({3, h, rays});
  require(st.surviving.size() == 6, "expected 6 surviving lambda sets after step 3");
  return st;
}

}  // namespace

KsSet run_algorithm_II(const BasisTable& table, const GammaTable& gammas, const ChoiceII& c) {
  CommonState st = run_common_steps(table, gammas, c);

  // Step 4: rays of odd multiplicity across the surviving lambda sets form
  // the closing hybrid basis; the two triply-occurring ones join sigma.
  MultiplicityProfile counts{};
  for (const auto& s : st.surviving)
    for (int r : s.rays) ++counts[static_cast<std::size_t>(r)];
  std::vector<int> closing, triple;
  for (int r = 1; r <= kNumRays; ++r) {
    if (counts[static_cast<std::size_t>(r)] % 2 == 1) closing.push_back(r);
    if (counts[static_cast<std::size_t>(r)] == 3) triple.push_back(r);
  }
  require(closing.size() == 8, "surviving lambda sets must leave exactly 8 odd rays");
  require(triple.size() == 2, "exactly 2 rays must occur 3 times in surviving lambda sets");

  int closing_id = 0;
  for (const Basis& b : table.bases()) {
    if (b.pure()) continue;
    if (std::equal(b.rays.begin(), b.rays.end(), closing.begin(), closing.end()))
      closing_id = b.id;
  }
  require(closing_id != 0, "closing 8 rays do not form a hybrid basis");
  require(!st.gw.has(closing_id), "closing hybrid basis was already generated");
  st.gw.add_missing({closing_id});
  st.steps.push_back(1);
  st.sigma.insert(st.sigma.end(), triple.begin(), triple.end());

  require(st.gw.order().size() == 13, "algorithm II must end with 13 bases");
  return finish(st.gw, std::move(st.sigma), std::move(st.steps), Signature{24, 14, 13});
}

KsSet run_algorithm_III(const BasisTable& table, const GammaTable& gammas,
                        const ChoiceIII& c) {
  CommonState st = run_common_steps(table, gammas, c);

  std::vector<int> remaining_pbs;
  for (int pb = 1; pb <= kNumPureBases; ++pb)
    if (pb != c.gamma1.pb && pb != c.gamma2.pb && pb != c.gamma3.pb)
      remaining_pbs.push_back(pb);
  require(remaining_pbs.size() == 2, "two pure bases must remain after step 3");

  // Steps 4 and 5: per remaining pure basis, one surviving set from each
  // family lies inside it; pairwise intersections union to the forced gamma.
  for (std::size_t step = 0; step < 2; ++step) {
    int pb = remaining_pbs[step];
    std::vector<std::vector<int>> picked;
    for (int family = 1; family <= 3; ++family) {
      const std::vector<int>* sel = nullptr;
      int hits = 0;
      for (const auto& s : st.surviving) {
        if (s.family != family) continue;
        if (table.pure_basis_of(s.rays.front()) == pb) {
          sel = &s.rays;
          ++hits;
        }
      }
      require(hits == 1 && sel != nullptr,
              "each lambda family must offer exactly one set per remaining pure basis");
      picked.push_back(*sel);
    }
    std::vector<int> forced;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b) {
        std::vector<int> inter;
        std::set_intersection(picked[a].begin(), picked[a].end(), picked[b].begin(),
                              picked[b].end(), std::back_inserter(inter));
        forced.insert(forced.end(), inter.begin(), inter.end());
      }
    std::sort(forced.begin(), forced.end());
    forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
    require(forced.size() == 4, "forced gamma extraction must yield 4 rays");

    const GammaSet* gamma = nullptr;
    for (const GammaSet& g : gammas.all())
      if (g.pb == pb && std::equal(g.rays.begin(), g.rays.end(), forced.begin()))
        gamma = &g;
    require(gamma != nullptr, "extracted ray union is not a gamma table entry");

    std::vector<int> added = st.gw.add_missing(generated_bases(table, *gamma).all());
    int expected = step == 0 ? 2 : 1;
    require(static_cast<int>(added.size()) == expected,
            step == 0 ? "step 4 must add its pure basis and exactly 1 new hybrid"
                      : "step 5 must add only its pure basis");
    st.steps.push_back(expected);
    st.sigma.insert(st.sigma.end(), forced.begin(), forced.end());
  }

  require(st.gw.order().size() == 15, "algorithm III must end with 15 bases");
  return finish(st.gw, std::move(st.sigma), std::move(st.steps), Signature{20, 20, 15});
}

namespace {

class Collector {
 public:
  void add(KsSet ks) {
    ++result_.parameterizations;
    ++result_.duplicates[ks.basis_ids];
    auto [it, inserted] = seen_.insert(ks.basis_ids);
    if (inserted) result_.sets.push_back(std::move(ks));
  }

  Enumeration take() {
    std::sort(result_.sets.begin(), result_.sets.end());
    return std::move(result_);
  }

 private:
  Enumeration result_;
  std::set<std::vector<int>> seen_;
};

}  // namespace

Enumeration enumerate_I(const BasisTable& table, const GammaTable& gammas) {
  Collector out;
  for (const GammaSet& g : gammas.all()) {
    std::vector<int> base = generated_bases(table, g).all();
    LambdaMap lambda1 = lambda_sets(table, base);
    for (const auto& [host, rays] : lambda1) {
      for (int sigma5 : rays) {
        std::vector<int> new2;
        for (int b : table.bases_containing(sigma5))
          if (b > kNumPureBases && !contains(base, b)) new2.push_back(b);
        for (const auto& [h, lrays] : lambda1) {
          if (h == host) continue;
          for (int sigma6 : delta_of(table, lrays, new2))
            out.add(run_algorithm_I(table, gammas,
                                    ChoiceI{{g.pb, g.slot}, sigma5, sigma6}));
        }
      }
    }
  }
  return out.take();
}

namespace {

// All (gamma1, gamma2, gamma3) triples satisfying the chained compatibility
// conditions; shared by Algorithms II and III.
std::vector<ChoiceII> enumerate_choice_triples(const BasisTable& table,
                                               const GammaTable& gammas) {
  std::vector<ChoiceII> choices;
  for (const GammaSet& g1 : gammas.all()) {
    std::vector<int> base = generated_bases(table, g1).all();
    LambdaMap lambda1 = lambda_sets(table, base);
    for (const auto& [host, rays] : lambda1) {
      for (const GammaSet& g2 : gammas.all()) {
        if (g2.pb == g1.pb) continue;
        if (intersection_size(rays, g2.rays) != 3) continue;

        std::vector<int> new2;
        std::vector<int> gen2 = generated_bases(table, g2).all();
        for (int b : gen2)
          if (!contains(base, b)) new2.push_back(b);
        LambdaMap lambda2 = lambda_sets(table, new2);
        for (const XiPair& p : xi_pairs(lambda1, host, lambda2)) {
          for (const GammaSet& g3 : gammas.all()) {
            if (g3.pb == g1.pb || g3.pb == g2.pb) continue;
            if (gamma_fits_pair(g3, p))
              choices.push_back(ChoiceII{{g1.pb, g1.slot}, {g2.pb, g2.slot},
                                         {g3.pb, g3.slot}});
          }
        }
      }
    }
  }
  return choices;
}

}  // namespace

Enumeration enumerate_II(const BasisTable& table, const GammaTable& gammas) {
  Collector out;
  for (const ChoiceII& c : enumerate_choice_triples(table, gammas))
    out.add(run_algorithm_II(table, gammas, c));
  return out.take();
}

Enumeration enumerate_III(const BasisTable& table, const GammaTable& gammas) {
  Collector out;
  for (const ChoiceIII& c : enumerate_choice_triples(table, gammas))
    out.add(run_algorithm_III(table, gammas, c));
  return out.take();
}

}  // namespace ks
