#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "ks/ks_set.hpp"
#include "ks/tables.hpp"

// Algorithms I, II and III as deterministic functions of explicit choice
// parameters, plus full enumerations of their choice spaces.

namespace ks {

// Position of a 4-ray generator set: pure basis i, slot j.
struct GammaIndex {
  int pb = 0;    // 1..5
  int slot = 0;  // 1..8

  friend bool operator==(const GammaIndex&, const GammaIndex&) = default;
};

// Algorithm I: one gamma set plus two ray picks. sigma5 must lie in one of
// the four first-step lambda sets, sigma6 in one of the three delta pairs.
struct ChoiceI {
  GammaIndex gamma;
  int sigma5 = 0;
  int sigma6 = 0;
};

// Algorithms II and III: three gamma sets from pairwise distinct pure
// bases, chained through the lambda / xi compatibility conditions.
struct ChoiceII {
  GammaIndex gamma1;
  GammaIndex gamma2;
  GammaIndex gamma3;
};

// Algorithm III takes the same three choices; its fourth and fifth gamma
// sets are forced.
using ChoiceIII = ChoiceII;

// 11 bases, type 28_2 8_4 - 11_8. Throws InvalidChoice on parameter
// violations, StructureError if a step's forced selection fails.
KsSet run_algorithm_I(const BasisTable& table, const GammaTable& gammas, const ChoiceI& c);

// 13 bases, type 24_2 14_4 - 13_8.
KsSet run_algorithm_II(const BasisTable& table, const GammaTable& gammas, const ChoiceII& c);

// 15 bases, type 20_2 20_4 - 15_8.
KsSet run_algorithm_III(const BasisTable& table, const GammaTable& gammas, const ChoiceIII& c);

struct Enumeration {
  std::vector<KsSet> sets;            // distinct, sorted by basis_ids
  std::size_t parameterizations = 0;  // valid choice tuples walked
  // How many parameterizations produced each distinct set, keyed by basis_ids.
  std::map<std::vector<int>, int> duplicates;
};

Enumeration enumerate_I(const BasisTable& table, const GammaTable& gammas);
Enumeration enumerate_II(const BasisTable& table, const GammaTable& gammas);
Enumeration enumerate_III(const BasisTable& table, const GammaTable& gammas);

}  // namespace ks
