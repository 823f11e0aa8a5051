#include <doctest.h>

#include <algorithm>
#include <set>

#include "ks/tables.hpp"

using namespace ks;

namespace {

// The 40 generator sets, row for row; independent fixture for the derivation.
constexpr int kExpectedGamma[5][8][4] = {
    {{1, 2, 3, 5}, {1, 2, 4, 6}, {1, 3, 4, 7}, {1, 5, 6, 7},
     {2, 3, 4, 8}, {2, 5, 6, 8}, {3, 5, 7, 8}, {4, 6, 7, 8}},
    {{9, 10, 11, 13}, {9, 10, 12, 14}, {9, 11, 12, 15}, {9, 13, 14, 15},
     {10, 11, 12, 16}, {10, 13, 14, 16}, {11, 13, 15, 16}, {12, 14, 15, 16}},
    {{17, 18, 19, 21}, {17, 18, 20, 22}, {17, 19, 20, 23}, {17, 21, 22, 23},
     {18, 19, 20, 24}, {18, 21, 22, 24}, {19, 21, 23, 24}, {20, 22, 23, 24}},
    {{25, 26, 27, 29}, {25, 26, 28, 30}, {25, 27, 28, 31}, {25, 29, 30, 31},
     {26, 27, 28, 32}, {26, 29, 30, 32}, {27, 29, 31, 32}, {28, 30, 31, 32}},
    {{33, 34, 35, 40}, {33, 34, 36, 38}, {33, 35, 36, 37}, {33, 37, 38, 40},
     {34, 35, 36, 39}, {34, 38, 39, 40}, {35, 37, 39, 40}, {36, 37, 38, 39}},
};

}  // namespace

TEST_CASE("builtin basis table rows") {
  const BasisTable& t = BasisTable::builtin();
  CHECK(t.bases().size() == 25);
  CHECK(t.basis(1).rays == std::array<int, 8>{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(t.basis(13).rays == std::array<int, 8>{5, 6, 7, 8, 9, 10, 11, 12});
  CHECK(t.basis(25).rays == std::array<int, 8>{26, 27, 29, 32, 34, 35, 39, 40});
  CHECK(t.basis(5).pure());
  CHECK(!t.basis(6).pure());
  for (const Basis& b : t.bases())
    CHECK(std::is_sorted(b.rays.begin(), b.rays.end()));
}

TEST_CASE("every ray occurs once in pure and 4 times in hybrid bases") {
  const BasisTable& t = BasisTable::builtin();
  for (int r = 1; r <= kNumRays; ++r) {
    int pure = 0, hybrid = 0;
    for (int b : t.bases_containing(r)) (b <= kNumPureBases ? pure : hybrid)++;
    CHECK(pure == 1);
    CHECK(hybrid == 4);
    CHECK(t.pure_basis_of(r) == t.bases_containing(r).front());
  }
}

TEST_CASE("every hybrid basis splits 4+4 across exactly two pure bases") {
  const BasisTable& t = BasisTable::builtin();
  for (const Basis& b : t.bases()) {
    if (b.pure()) continue;
    std::map<int, int> per_pure;
    for (int r : b.rays) ++per_pure[t.pure_basis_of(r)];
    CHECK(per_pure.size() == 2);
    for (const auto& [pb, n] : per_pure) CHECK(n == 4);
  }
}

TEST_CASE("multiplicity profile") {
  const BasisTable& t = BasisTable::builtin();

  SUBCASE("single basis") {
    auto p = t.multiplicity_profile({1});
    for (int r = 1; r <= 8; ++r) CHECK(p[static_cast<std::size_t>(r)] == 1);
    for (int r = 9; r <= 40; ++r) CHECK(p[static_cast<std::size_t>(r)] == 0);
  }
  SUBCASE("all 25 bases give every ray multiplicity 5") {
    std::vector<int> all;
    for (int b = 1; b <= 25; ++b) all.push_back(b);
    auto p = t.multiplicity_profile(all);
    for (int r = 1; r <= 40; ++r) CHECK(p[static_cast<std::size_t>(r)] == 5);
  }
  SUBCASE("empty selection") {
    auto p = t.multiplicity_profile({});
    for (int r = 1; r <= 40; ++r) CHECK(p[static_cast<std::size_t>(r)] == 0);
  }
}

TEST_CASE("gamma table derivation matches the fixture entry for entry") {
  const BasisTable& t = BasisTable::builtin();
  GammaTable gt = derive_gamma_table(t);
  CHECK(gt.all().size() == 40);
  for (int pb = 1; pb <= 5; ++pb) {
    for (int slot = 1; slot <= 8; ++slot) {
      const GammaSet& g = gt.at(pb, slot);
      CHECK(g.pb == pb);
      CHECK(g.slot == slot);
      for (int k = 0; k < 4; ++k)
        CHECK(g.rays[static_cast<std::size_t>(k)] == kExpectedGamma[pb - 1][slot - 1][k]);
    }
  }
}

TEST_CASE("complement in pure basis") {
  const BasisTable& t = BasisTable::builtin();
  GammaTable gt = derive_gamma_table(t);

  CHECK(complement_in_pb(t, gt.at(3, 4)) == std::array<int, 4>{18, 19, 20, 24});
  CHECK(complement_in_pb(t, gt.at(1, 1)) == std::array<int, 4>{4, 6, 7, 8});

  for (const GammaSet& g : gt.all()) {
    auto comp = complement_in_pb(t, g);
    std::set<int> all(g.rays.begin(), g.rays.end());
    all.insert(comp.begin(), comp.end());
    std::set<int> pure(t.basis(g.pb).rays.begin(), t.basis(g.pb).rays.end());
    CHECK(all == pure);
  }
}

TEST_CASE("generated bases") {
  const BasisTable& t = BasisTable::builtin();
  GammaTable gt = derive_gamma_table(t);

  SUBCASE("worked cases") {
    GeneratedBases g34 = generated_bases(t, gt.at(3, 4));
    CHECK(g34.pure == 3);
    CHECK(g34.hybrids == std::array<int, 4>{7, 19, 20, 21});

    GeneratedBases g11 = generated_bases(t, gt.at(1, 1));
    CHECK(g11.pure == 1);
    CHECK(g11.hybrids == std::array<int, 4>{6, 7, 8, 10});
  }

  SUBCASE("each hybrid shares 4 rays with the pure basis") {
    for (const GammaSet& g : gt.all()) {
      GeneratedBases gen = generated_bases(t, g);
      for (int h : gen.hybrids) {
        int shared = 0;
        for (int r : t.basis(h).rays)
          if (t.basis(g.pb).contains(r)) ++shared;
        CHECK(shared == 4);
      }
    }
  }

  SUBCASE("multiplicity profile over the 5 generated bases") {
    for (const GammaSet& g : gt.all()) {
      GeneratedBases gen = generated_bases(t, g);
      auto p = t.multiplicity_profile(gen.all());
      auto comp = complement_in_pb(t, g);
      int once = 0;
      for (int r = 1; r <= kNumRays; ++r) {
        int m = p[static_cast<std::size_t>(r)];
        if (g.contains(r))
          CHECK(m == 4);
        else if (std::find(comp.begin(), comp.end(), r) != comp.end())
          CHECK(m == 2);
        else if (m == 1)
          ++once;
        else
          CHECK(m == 0);
      }
      CHECK(once == 16);
    }
  }
}

TEST_CASE("lambda sets of the worked examples") {
  const BasisTable& t = BasisTable::builtin();
  GammaTable gt = derive_gamma_table(t);

  auto after = [&](int pb, int slot) {
    return lambda_sets(t, generated_bases(t, gt.at(pb, slot)).all());
  };

  auto l34 = after(3, 4);
  CHECK(l34.at(19) == std::vector<int>{11, 12, 15, 16});
  CHECK(l34.at(7) == std::vector<int>{1, 2, 5, 6});
  CHECK(l34.at(20) == std::vector<int>{26, 28, 30, 32});
  CHECK(l34.at(21) == std::vector<int>{35, 36, 37, 39});

  auto l11 = after(1, 1);
  CHECK(l11.at(10) == std::vector<int>{33, 34, 35, 36});
  CHECK(l11.at(6) == std::vector<int>{13, 14, 15, 16});
}

TEST_CASE("out of range ids are rejected") {
  const BasisTable& t = BasisTable::builtin();
  CHECK_THROWS_AS(t.basis(0), InvalidChoice);
  CHECK_THROWS_AS(t.basis(26), InvalidChoice);
  CHECK_THROWS_AS(t.bases_containing(41), InvalidChoice);
}
