#include "ks/ks_set.hpp"

#include <algorithm>

namespace ks {

std::string Signature::str() const {
  return std::to_string(n_twice) + "_2 " + std::to_string(n_four) + "_4 - " +
         std::to_string(n_bases) + "_8";
}

bool operator==(const KsSet& a, const KsSet& b) { return a.basis_ids == b.basis_ids; }

bool operator<(const KsSet& a, const KsSet& b) { return a.basis_ids < b.basis_ids; }

KsSet canonicalize(const KsSet& ks) {
  KsSet out = ks;
  std::sort(out.basis_ids.begin(), out.basis_ids.end());
  std::sort(out.sigma.begin(), out.sigma.end());
  return out;
}

}  // namespace ks
