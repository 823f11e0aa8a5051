#include <doctest.h>

#include <bit>
#include <random>

#include "ks/generators.hpp"
#include "ks/verifier.hpp"

using namespace ks;

namespace {

const BasisTable& table() { return BasisTable::builtin(); }

}  // namespace

TEST_CASE("verify_parity") {
  SUBCASE("the 11-basis worked example is a valid parity proof") {
    ParityCertificate cert =
        verify_parity(table(), {1, 6, 7, 8, 10, 14, 15, 17, 20, 21, 25});
    CHECK(cert.valid);
    REQUIRE(cert.signature.has_value());
    CHECK(*cert.signature == Signature{28, 8, 11});
    CHECK(cert.signature->str() == "28_2 8_4 - 11_8");
  }
  SUBCASE("a single basis is not a parity proof") {
    ParityCertificate cert = verify_parity(table(), {1});
    CHECK(!cert.valid);
    CHECK(!cert.signature.has_value());
  }
  SUBCASE("all 25 bases fail: every multiplicity is 5") {
    std::vector<int> all;
    for (int b = 1; b <= 25; ++b) all.push_back(b);
    ParityCertificate cert = verify_parity(table(), all);
    CHECK(!cert.valid);
  }
  SUBCASE("duplicate ids collapse to a set") {
    ParityCertificate cert = verify_parity(table(), {1, 1, 1});
    CHECK(cert.basis_ids == std::vector<int>{1});
    CHECK(!cert.valid);
  }
  SUBCASE("out-of-range ids yield an invalid certificate, no throw") {
    CHECK(!verify_parity(table(), {0, 26}).valid);
  }
}

TEST_CASE("basis masks") {
  CHECK(basis_mask(table(), 1) == 0xFFull);
  std::vector<int> all;
  for (int b = 1; b <= 25; ++b) all.push_back(b);
  CHECK(xor_mask(table(), all) == (1ull << 40) - 1);  // every ray occurs 5 times
  CHECK(xor_mask(table(), {1, 6, 7, 8, 10, 14, 15, 17, 20, 21, 25}) == 0);
  for (int b = 1; b <= 25; ++b) CHECK(std::popcount(basis_mask(table(), b)) == 8);
}

TEST_CASE("XOR predicate agrees with the multiplicity predicate") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<std::uint32_t> dist(1, (1u << 25) - 1);
  for (int trial = 0; trial < 10000; ++trial) {
    std::uint32_t bits = dist(rng);
    std::vector<int> ids;
    for (int b = 1; b <= 25; ++b)
      if (bits & (1u << (b - 1))) ids.push_back(b);
    bool by_mask = (ids.size() % 2 == 1) && xor_mask(table(), ids) == 0;
    CHECK(verify_parity(table(), ids).valid == by_mask);
  }
}

TEST_CASE("noncolourability check") {
  SUBCASE("a single basis is colourable") {
    CHECK(!noncolourability_check(table(), {1}));
  }
  SUBCASE("the five pure bases are colourable") {
    CHECK(!noncolourability_check(table(), {1, 2, 3, 4, 5}));
  }
  SUBCASE("generated KS sets are noncolourable") {
    GammaTable gt = derive_gamma_table(table());
    KsSet a = run_algorithm_I(table(), gt, ChoiceI{{1, 1}, 13, 23});
    KsSet b = run_algorithm_II(table(), gt, ChoiceII{{1, 1}, {2, 4}, {3, 7}});
    KsSet c = run_algorithm_III(table(), gt, ChoiceIII{{1, 1}, {2, 4}, {3, 7}});
    CHECK(noncolourability_check(table(), a.basis_ids));
    CHECK(noncolourability_check(table(), b.basis_ids));
    CHECK(noncolourability_check(table(), c.basis_ids));
  }
}

TEST_CASE("oracle scan" * doctest::timeout(120)) {
  OracleResult result = oracle_enumerate(table());
  CHECK(result.subsets_scanned == (1u << 25) - 1);
  CHECK(result.total() == 1024);
  REQUIRE(result.by_signature.size() == 3);
  CHECK(result.by_signature.at(Signature{28, 8, 11}).size() == 320);
  CHECK(result.by_signature.at(Signature{24, 14, 13}).size() == 640);
  CHECK(result.by_signature.at(Signature{20, 20, 15}).size() == 64);

  // The 13-basis worked example appears in its bucket.
  std::vector<int> example = {1, 2, 3, 6, 7, 8, 10, 14, 15, 16, 20, 22, 25};
  const auto& bucket = result.by_signature.at(Signature{24, 14, 13});
  bool found = false;
  for (const KsSet& ks : bucket)
    if (ks.basis_ids == example) found = true;
  CHECK(found);
}
