#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

// Incidence structure of the 40-ray / 25-basis three-qubit system and the
// derived table of 4-ray generator sets.

namespace ks {

inline constexpr int kNumRays = 40;
inline constexpr int kNumBases = 25;
inline constexpr int kNumPureBases = 5;
inline constexpr int kBasisSize = 8;

// Raised when the builtin incidence data fails a structural assumption.
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a caller-supplied choice parameter violates a precondition.
struct InvalidChoice : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Basis {
  int id = 0;                           // 1..25
  std::array<int, kBasisSize> rays{};   // ascending, distinct

  bool pure() const { return id <= kNumPureBases; }
  bool contains(int ray) const;
};

// Per-ray multiplicity over a basis selection; index by ray id, slot 0 unused.
using MultiplicityProfile = std::array<int, kNumRays + 1>;

class BasisTable {
 public:
  // The fixed 25-basis table. Same object every call.
  static const BasisTable& builtin();

  const Basis& basis(int id) const;
  const std::vector<Basis>& bases() const { return bases_; }

  // Ids of all bases containing `ray`, ascending. The pure one comes first.
  const std::vector<int>& bases_containing(int ray) const;

  MultiplicityProfile multiplicity_profile(const std::vector<int>& basis_ids) const;

  // The pure basis hosting `ray` (each ray sits in exactly one).
  int pure_basis_of(int ray) const;

 private:
  explicit BasisTable(std::vector<Basis> bases);

  std::vector<Basis> bases_;
  std::array<std::vector<int>, kNumRays + 1> containing_;
  std::array<int, kNumRays + 1> pure_of_{};
};

// A 4-ray subset of a pure basis whose four 3-subsets all recur inside
// hybrid bases. Slot j numbers the eight such sets of a pure basis in
// lexicographic order.
struct GammaSet {
  int pb = 0;                  // 1..5
  int slot = 0;                // 1..8
  std::array<int, 4> rays{};   // ascending

  bool contains(int ray) const;
};

class GammaTable {
 public:
  explicit GammaTable(std::vector<GammaSet> entries);

  const GammaSet& at(int pb, int slot) const;
  const std::vector<GammaSet>& all() const { return entries_; }

 private:
  std::vector<GammaSet> entries_;  // 40, ordered (pb, slot)
};

// Finds, for each pure basis, every 4-ray subset whose 3-subsets each occur
// inside some hybrid basis. Throws StructureError unless each pure basis
// yields exactly 8.
GammaTable derive_gamma_table(const BasisTable& table);

// The 4 rays of pure basis g.pb not in g, ascending.
std::array<int, 4> complement_in_pb(const BasisTable& table, const GammaSet& g);

struct GeneratedBases {
  int pure = 0;
  std::array<int, 4> hybrids{};  // ascending

  std::vector<int> all() const;  // pure first, then hybrids
};

// The pure basis of g plus the four hybrid bases hosting its 3-subsets.
// Throws StructureError if a 3-subset matches zero or multiple hybrids.
GeneratedBases generated_bases(const BasisTable& table, const GammaSet& g);

// For each hybrid basis in `basis_ids`, the set of its rays whose
// multiplicity across `basis_ids` is exactly 1. Keyed by basis id.
std::map<int, std::vector<int>> lambda_sets(const BasisTable& table,
                                            const std::vector<int>& basis_ids);

}  // namespace ks
