#include "ks/verifier.hpp"

#include <algorithm>
#include <bit>

namespace ks {

namespace {

std::optional<Signature> classify(const MultiplicityProfile& profile, int n_bases) {
  Signature sig;
  sig.n_bases = n_bases;
  for (int r = 1; r <= kNumRays; ++r) {
    int m = profile[static_cast<std::size_t>(r)];
    if (m == 2)
      ++sig.n_twice;
    else if (m == 4)
      ++sig.n_four;
    else if (m != 0)
      return std::nullopt;  // odd or >4 multiplicity, not a parity proof here
  }
  return sig;
}

}  // namespace

ParityCertificate verify_parity(const BasisTable& table, const std::vector<int>& basis_ids) {
  ParityCertificate cert;
  cert.basis_ids = basis_ids;
  std::sort(cert.basis_ids.begin(), cert.basis_ids.end());
  cert.basis_ids.erase(std::unique(cert.basis_ids.begin(), cert.basis_ids.end()),
                       cert.basis_ids.end());
  for (int id : cert.basis_ids)
    if (id < 1 || id > kNumBases) return cert;  // out of range: invalid, no throw

  cert.multiplicity = table.multiplicity_profile(cert.basis_ids);
  bool all_even = true;
  for (int r = 1; r <= kNumRays; ++r)
    if (cert.multiplicity[static_cast<std::size_t>(r)] % 2 != 0) all_even = false;
  cert.valid = (cert.basis_ids.size() % 2 == 1) && all_even;
  if (cert.valid)
    cert.signature = classify(cert.multiplicity, static_cast<int>(cert.basis_ids.size()));
  return cert;
}

OccurrenceMask basis_mask(const BasisTable& table, int basis_id) {
  OccurrenceMask mask = 0;
  for (int r : table.basis(basis_id).rays) mask |= OccurrenceMask{1} << (r - 1);
  return mask;
}

OccurrenceMask xor_mask(const BasisTable& table, const std::vector<int>& basis_ids) {
  OccurrenceMask mask = 0;
  for (int id : basis_ids) mask ^= basis_mask(table, id);
  return mask;
}

std::size_t OracleResult::total() const {
  std::size_t n = 0;
  for (const auto& [sig, sets] : by_signature) n += sets.size();
  return n;
}

OracleResult oracle_enumerate(const BasisTable& table) {
  std::array<OccurrenceMask, kNumBases> masks{};
  for (int b = 1; b <= kNumBases; ++b)
    masks[static_cast<std::size_t>(b - 1)] = basis_mask(table, b);

  // Meet-in-the-middle lookup: precomputed XOR and parity for the low 13
  // and high 12 bits of the subset index.
  constexpr int kLowBits = 13;
  constexpr std::uint32_t kLowSize = 1u << kLowBits;
  constexpr std::uint32_t kHighSize = 1u << (kNumBases - kLowBits);
  std::vector<OccurrenceMask> lo_xor(kLowSize), hi_xor(kHighSize);
  for (std::uint32_t s = 1; s < kLowSize; ++s) {
    unsigned bit = static_cast<unsigned>(std::countr_zero(s));
    lo_xor[s] = lo_xor[s & (s - 1)] ^ masks[bit];
  }
  for (std::uint32_t s = 1; s < kHighSize; ++s) {
    unsigned bit = static_cast<unsigned>(std::countr_zero(s));
    hi_xor[s] = hi_xor[s & (s - 1)] ^ masks[kLowBits + bit];
  }

  OracleResult result;
  for (std::uint32_t s = 1; s < (1u << kNumBases); ++s) {
    ++result.subsets_scanned;
    if (std::popcount(s) % 2 == 0) continue;
    if ((lo_xor[s & (kLowSize - 1)] ^ hi_xor[s >> kLowBits]) != 0) continue;

    std::vector<int> ids;
    for (int b = 1; b <= kNumBases; ++b)
      if (s & (1u << (b - 1))) ids.push_back(b);
    ParityCertificate cert = verify_parity(table, ids);
    if (!cert.valid || !cert.signature)
      throw StructureError("oracle survivor failed certificate cross-check");

    KsSet ks;
    ks.basis_ids = std::move(ids);
    for (int r = 1; r <= kNumRays; ++r)
      if (cert.multiplicity[static_cast<std::size_t>(r)] == 4) ks.sigma.push_back(r);
    ks.signature = *cert.signature;
    result.by_signature[ks.signature].push_back(std::move(ks));
  }
  for (auto& [sig, sets] : result.by_signature) std::sort(sets.begin(), sets.end());
  return result;
}

namespace {

// Search for a ray set hitting each basis exactly once. `chosen` rays carry
// value 1; `excluded` rays sit in an already-decided basis and must stay 0.
bool colouring_exists(const BasisTable& table, const std::vector<int>& basis_ids,
                      std::size_t depth, std::uint64_t chosen, std::uint64_t excluded) {
  if (depth == basis_ids.size()) return true;
  const Basis& b = table.basis(basis_ids[depth]);

  int hits = 0;
  for (int r : b.rays)
    if (chosen & (std::uint64_t{1} << (r - 1))) ++hits;
  if (hits > 1) return false;
  if (hits == 1) {
    // Basis already satisfied; its other rays must be 0.
    std::uint64_t extra = 0;
    for (int r : b.rays) {
      std::uint64_t bit = std::uint64_t{1} << (r - 1);
      if (!(chosen & bit)) extra |= bit;
    }
    return colouring_exists(table, basis_ids, depth + 1, chosen, excluded | extra);
  }

  for (int r : b.rays) {
    std::uint64_t bit = std::uint64_t{1} << (r - 1);
    if (excluded & bit) continue;
    std::uint64_t extra = 0;
    for (int other : b.rays)
      if (other != r) extra |= std::uint64_t{1} << (other - 1);
    if (colouring_exists(table, basis_ids, depth + 1, chosen | bit, excluded | extra))
      return true;
  }
  return false;
}

}  // namespace

bool noncolourability_check(const BasisTable& table, const std::vector<int>& basis_ids) {
  return !colouring_exists(table, basis_ids, 0, 0, 0);
}

}  // namespace ks
