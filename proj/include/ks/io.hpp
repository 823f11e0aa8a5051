#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "ks/generators.hpp"
#include "ks/ks_set.hpp"

// Text and JSON surfaces: choice-spec parsing, the KsSetRecord export
// schema, the DOT orthogonality graph, and ray-vector file validation.

namespace ks {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Type 36: "G<i>.<j>,S5=<ray>,S6=<ray>". Types 38/40: "G<i>.<j>,G<i>.<j>,G<i>.<j>".
// Validates ranges; membership conditions are checked by the algorithms.
std::variant<ChoiceI, ChoiceII> choice_spec_parse(const std::string& text, int type);

std::string choice_spec_format(const ChoiceI& c);
std::string choice_spec_format(const ChoiceII& c);

// One exported KS set. `type` is the ray count (36, 38 or 40); `choice` is
// the originating choice spec, empty for oracle-found sets.
struct KsSetRecord {
  int type = 0;
  std::vector<int> bases;   // ascending
  std::vector<int> sigma;   // ascending
  std::string signature;
  std::string choice;
  std::vector<int> generation_order;

  friend bool operator==(const KsSetRecord&, const KsSetRecord&) = default;
};

KsSetRecord make_record(const KsSet& ks, const std::string& choice);

// Canonical single-line JSON with fixed key order; parse rejects malformed
// or incomplete records.
std::string record_to_json(const KsSetRecord& rec);
KsSetRecord record_from_json(const std::string& json_text);

// 40-node graph; an edge joins two rays that co-occur in some basis.
std::string export_orthogonality_dot(const BasisTable& table);

struct RayVector {
  int id = 0;
  std::array<long long, 8> components{};
};

struct RayVectorFile {
  std::vector<RayVector> rays;  // 40 records, ids 1..40 in order
};

// Format: one record per line, "id c1 c2 ... c8"; '#' starts a comment.
// Throws ParseError with a line number on malformed input.
RayVectorFile parse_ray_vectors(std::istream& in);

struct OrthogonalityViolation {
  int basis_id = 0;
  int ray_a = 0;
  int ray_b = 0;
  long long dot = 0;
};

struct OrthogonalityReport {
  std::vector<OrthogonalityViolation> violations;
  int pairs_checked = 0;

  bool ok() const { return violations.empty(); }
};

// Checks all 28 ray pairs of each of the 25 bases for zero integer dot
// product.
OrthogonalityReport validate_ray_vectors(const BasisTable& table, const RayVectorFile& file);

}  // namespace ks
