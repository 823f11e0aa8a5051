#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ks/ks_set.hpp"
#include "ks/tables.hpp"

// Parity-proof verification, independent of the generator machinery: the
// certificate, the GF(2) mask encoding, an exhaustive scan of all 2^25
// basis subsets, and a backtracking noncolourability check.

namespace ks {

// 40-bit ray occurrence vector; bit r-1 set iff ray r is present.
using OccurrenceMask = std::uint64_t;

struct ParityCertificate {
  std::vector<int> basis_ids;        // ascending, deduplicated
  MultiplicityProfile multiplicity{};
  bool valid = false;
  std::optional<Signature> signature;  // classified only when valid
};

// A subset of bases is a parity proof iff the number of bases is odd and
// every ray multiplicity is even. Never throws on in-range input.
ParityCertificate verify_parity(const BasisTable& table, const std::vector<int>& basis_ids);

OccurrenceMask basis_mask(const BasisTable& table, int basis_id);

// XOR of the masks of `basis_ids`; zero iff every ray multiplicity is even.
OccurrenceMask xor_mask(const BasisTable& table, const std::vector<int>& basis_ids);

struct OracleResult {
  std::map<Signature, std::vector<KsSet>> by_signature;  // sets sorted
  std::uint64_t subsets_scanned = 0;

  std::size_t total() const;
};

// Scans all 2^25 - 1 nonempty basis subsets for odd cardinality and zero
// XOR mask. Shares nothing with the generators beyond the basis table.
OracleResult oracle_enumerate(const BasisTable& table);

// True iff no {0,1} assignment to the rays puts exactly one 1 in every
// listed basis. Backtracking over per-basis ray selections.
bool noncolourability_check(const BasisTable& table, const std::vector<int>& basis_ids);

}  // namespace ks
