#include "ks/tables.hpp"

#include <algorithm>

namespace ks {

namespace {

// The 25 bases of the 40-ray system. Rows 1-5 are the pure bases.
constexpr int kBasisRows[kNumBases][kBasisSize] = {
    {1, 2, 3, 4, 5, 6, 7, 8},
    {9, 10, 11, 12, 13, 14, 15, 16},
    {17, 18, 19, 20, 21, 22, 23, 24},
    {25, 26, 27, 28, 29, 30, 31, 32},
    {33, 34, 35, 36, 37, 38, 39, 40},
    {1, 2, 3, 4, 13, 14, 15, 16},
    {1, 2, 5, 6, 21, 22, 23, 24},
    {1, 3, 5, 7, 29, 30, 31, 32},
    {1, 4, 6, 7, 37, 38, 39, 40},
    {2, 3, 5, 8, 33, 34, 35, 36},
    {2, 4, 6, 8, 25, 26, 27, 28},
    {3, 4, 7, 8, 17, 18, 19, 20},
    {5, 6, 7, 8, 9, 10, 11, 12},
    {9, 10, 13, 14, 19, 20, 23, 24},
    {9, 11, 13, 15, 27, 28, 31, 32},
    {9, 12, 14, 15, 34, 36, 38, 39},
    {10, 11, 13, 16, 33, 35, 37, 40},
    {10, 12, 14, 16, 25, 26, 29, 30},
    {11, 12, 15, 16, 17, 18, 21, 22},
    {17, 19, 21, 23, 26, 28, 30, 32},
    {17, 20, 22, 23, 35, 36, 37, 39},
    {18, 19, 21, 24, 33, 34, 38, 40},
    {18, 20, 22, 24, 25, 27, 29, 31},
    {25, 28, 30, 31, 33, 36, 37, 38},
    {26, 27, 29, 32, 34, 35, 39, 40},
};

void check_ray(int ray) {
  if (ray < 1 || ray > kNumRays)
    throw InvalidChoice("ray id out of range: " + std::to_string(ray));
}

void check_basis_id(int id) {
  if (id < 1 || id > kNumBases)
    throw InvalidChoice("basis id out of range: " + std::to_string(id));
}

}  // namespace

bool Basis::contains(int ray) const {
  return std::find(rays.begin(), rays.end(), ray) != rays.end();
}

bool GammaSet::contains(int ray) const {
  return std::find(rays.begin(), rays.end(), ray) != rays.end();
}

BasisTable::BasisTable(std::vector<Basis> bases) : bases_(std::move(bases)) {
  for (const Basis& b : bases_) {
    for (int r : b.rays) {
      containing_[r].push_back(b.id);
      if (b.pure()) pure_of_[r] = b.id;
    }
  }
}

const BasisTable& BasisTable::builtin() {
  static const BasisTable table = [] {
    std::vector<Basis> bases;
    bases.reserve(kNumBases);
    for (int i = 0; i < kNumBases; ++i) {
      Basis b;
      b.id = i + 1;
      std::copy(std::begin(kBasisRows[i]), std::end(kBasisRows[i]), b.rays.begin());
      bases.push_back(b);
    }
    return BasisTable(std::move(bases));
  }();
  return table;
}

const Basis& BasisTable::basis(int id) const {
  check_basis_id(id);
  return bases_[static_cast<std::size_t>(id - 1)];
}

const std::vector<int>& BasisTable::bases_containing(int ray) const {
  check_ray(ray);
  return containing_[static_cast<std::size_t>(ray)];
}

int BasisTable::pure_basis_of(int ray) const {
  check_ray(ray);
  return pure_of_[static_cast<std::size_t>(ray)];
}

MultiplicityProfile BasisTable::multiplicity_profile(const std::vector<int>& basis_ids) const {
  MultiplicityProfile profile{};
  for (int id : basis_ids) {
    for (int r : basis(id).rays) ++profile[static_cast<std::size_t>(r)];
  }
  return profile;
}

GammaTable::GammaTable(std::vector<GammaSet> entries) : entries_(std::move(entries)) {
  if (entries_.size() != kNumPureBases * 8)
    throw StructureError("gamma table must have 40 entries, got " +
                         std::to_string(entries_.size()));
}

const GammaSet& GammaTable::at(int pb, int slot) const {
  if (pb < 1 || pb > kNumPureBases)
    throw InvalidChoice("pure basis index out of range: " + std::to_string(pb));
  if (slot < 1 || slot > 8)
    throw InvalidChoice("gamma slot out of range: " + std::to_string(slot));
  return entries_[static_cast<std::size_t>((pb - 1) * 8 + (slot - 1))];
}

GammaTable derive_gamma_table(const BasisTable& table) {
  std::vector<GammaSet> entries;
  for (int pb = 1; pb <= kNumPureBases; ++pb) {
    const Basis& pure = table.basis(pb);
    std::vector<std::array<int, 4>> found;
    // All C(8,4) subsets of the pure basis, in lexicographic order.
    for (int a = 0; a < 8; ++a)
      for (int b = a + 1; b < 8; ++b)
        for (int c = b + 1; c < 8; ++c)
          for (int d = c + 1; d < 8; ++d) {
            std::array<int, 4> quad = {pure.rays[a], pure.rays[b],
                                       pure.rays[c], pure.rays[d]};
            bool property_one = true;
            for (int skip = 0; skip < 4 && property_one; ++skip) {
              bool hosted = false;
              for (const Basis& h : table.bases()) {
                if (h.pure()) continue;
                bool all_in = true;
                for (int k = 0; k < 4; ++k) {
                  if (k == skip) continue;
                  if (!h.contains(quad[static_cast<std::size_t>(k)])) {
                    all_in = false;
                    break;
                  }
                }
                if (all_in && !h.contains(quad[static_cast<std::size_t>(skip)])) {
                  hosted = true;
                  break;
                }
              }
              property_one = hosted;
            }
            if (property_one) found.push_back(quad);
          }
    if (found.size() != 8)
      throw StructureError("pure basis " + std::to_string(pb) + " yields " +
                           std::to_string(found.size()) +
                           " candidate 4-ray sets, expected 8");
    for (std::size_t j = 0; j < found.size(); ++j) {
      GammaSet g;
      g.pb = pb;
      g.slot = static_cast<int>(j + 1);
      g.rays = found[j];
      entries.push_back(g);
    }
  }
  return GammaTable(std::move(entries));
}

std::array<int, 4> complement_in_pb(const BasisTable& table, const GammaSet& g) {
  const Basis& pure = table.basis(g.pb);
  std::array<int, 4> out{};
  std::size_t n = 0;
  for (int r : pure.rays) {
    if (!g.contains(r)) {
      if (n == 4) throw StructureError("gamma set is not a subset of its pure basis");
      out[n++] = r;
    }
  }
  if (n != 4) throw StructureError("gamma set is not a subset of its pure basis");
  return out;
}

std::vector<int> GeneratedBases::all() const {
  std::vector<int> out = {pure};
  out.insert(out.end(), hybrids.begin(), hybrids.end());
  return out;
}

GeneratedBases generated_bases(const BasisTable& table, const GammaSet& g) {
  GeneratedBases out;
  out.pure = g.pb;
  std::vector<int> hybrids;
  // One hybrid per 3-subset of g.
  for (int skip = 0; skip < 4; ++skip) {
    int match = 0;
    int matches = 0;
    for (const Basis& h : table.bases()) {
      if (h.pure()) continue;
      bool all_in = true;
      for (int k = 0; k < 4; ++k) {
        if (k == skip) continue;
        if (!h.contains(g.rays[static_cast<std::size_t>(k)])) {
          all_in = false;
          break;
        }
      }
      // The hybrid must not swallow the whole quad.
      if (all_in && !h.contains(g.rays[static_cast<std::size_t>(skip)])) {
        match = h.id;
        ++matches;
      }
    }
    if (matches != 1)
      throw StructureError("3-subset of gamma set matches " + std::to_string(matches) +
                           " hybrid bases, expected exactly 1");
    hybrids.push_back(match);
  }
  std::sort(hybrids.begin(), hybrids.end());
  if (std::unique(hybrids.begin(), hybrids.end()) != hybrids.end())
    throw StructureError("gamma set generates duplicate hybrid bases");
  std::copy(hybrids.begin(), hybrids.end(), out.hybrids.begin());
  return out;
}

std::map<int, std::vector<int>> lambda_sets(const BasisTable& table,
                                            const std::vector<int>& basis_ids) {
  MultiplicityProfile profile = table.multiplicity_profile(basis_ids);
  std::map<int, std::vector<int>> out;
  for (int id : basis_ids) {
    const Basis& b = table.basis(id);
    if (b.pure()) continue;
    std::vector<int> once;
    for (int r : b.rays)
      if (profile[static_cast<std::size_t>(r)] == 1) once.push_back(r);
    out[id] = std::move(once);
  }
  return out;
}

}  // namespace ks
