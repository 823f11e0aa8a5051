#pragma once

#include <string>
#include <vector>

#include "ks/tables.hpp"

namespace ks {

// Multiplicity signature of a parity proof, rendered as "28_2 8_4 - 11_8":
// 28 rays of multiplicity 2 and 8 of multiplicity 4 across 11 bases.
struct Signature {
  int n_twice = 0;
  int n_four = 0;
  int n_bases = 0;

  std::string str() const;
  int ray_count() const { return n_twice + n_four; }

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

struct KsSet {
  std::vector<int> basis_ids;        // ascending
  std::vector<int> sigma;            // quadruple-multiplicity rays, selection order
  Signature signature;

  // Provenance from generation; empty for oracle-found sets.
  std::vector<int> generation_order;  // basis ids as generated
  std::vector<int> step_new_bases;    // bases added per algorithm step
};

// Equality and ordering are by basis_ids alone; sigma and signature are
// derived data.
bool operator==(const KsSet& a, const KsSet& b);
bool operator<(const KsSet& a, const KsSet& b);

// Sorted basis_ids and sigma; idempotent. Provenance fields are preserved.
KsSet canonicalize(const KsSet& ks);

}  // namespace ks
