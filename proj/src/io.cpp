#include "ks/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ks {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  out.push_back(current);
  return out;
}

int parse_int(const std::string& token, const std::string& context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("bad " + context + ": '" + token + "'");
  return value;
}

GammaIndex parse_gamma_token(const std::string& token) {
  if (token.size() < 4 || token[0] != 'G')
    throw ParseError("bad gamma token: '" + token + "' (expected G<i>.<j>)");
  std::size_t dot = token.find('.');
  if (dot == std::string::npos)
    throw ParseError("bad gamma token: '" + token + "' (expected G<i>.<j>)");
  GammaIndex g;
  g.pb = parse_int(token.substr(1, dot - 1), "pure basis index in '" + token + "'");
  g.slot = parse_int(token.substr(dot + 1), "gamma slot in '" + token + "'");
  if (g.pb < 1 || g.pb > kNumPureBases)
    throw ParseError("pure basis index out of range in '" + token + "'");
  if (g.slot < 1 || g.slot > 8)
    throw ParseError("gamma slot out of range in '" + token + "'");
  return g;
}

int parse_ray_token(const std::string& token, const std::string& key) {
  std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0)
    throw ParseError("bad token: '" + token + "' (expected " + key + "=<ray>)");
  int ray = parse_int(token.substr(prefix.size()), "ray id in '" + token + "'");
  if (ray < 1 || ray > kNumRays)
    throw ParseError("ray id out of range in '" + token + "'");
  return ray;
}

}  // namespace

std::variant<ChoiceI, ChoiceII> choice_spec_parse(const std::string& text, int type) {
  std::vector<std::string> tokens = split(text, ',');
  if (type == 36) {
    if (tokens.size() != 3)
      throw ParseError("type 36 spec needs 3 tokens (G<i>.<j>,S5=<ray>,S6=<ray>), got " +
                       std::to_string(tokens.size()));
    ChoiceI c;
    c.gamma = parse_gamma_token(tokens[0]);
    c.sigma5 = parse_ray_token(tokens[1], "S5");
    c.sigma6 = parse_ray_token(tokens[2], "S6");
    return c;
  }
  if (type == 38 || type == 40) {
    if (tokens.size() != 3)
      throw ParseError("type " + std::to_string(type) +
                       " spec needs 3 gamma tokens, got " + std::to_string(tokens.size()));
    ChoiceII c;
    c.gamma1 = parse_gamma_token(tokens[0]);
    c.gamma2 = parse_gamma_token(tokens[1]);
    c.gamma3 = parse_gamma_token(tokens[2]);
    return c;
  }
  throw ParseError("unknown KS set type: " + std::to_string(type));
}

std::string choice_spec_format(const ChoiceI& c) {
  return "G" + std::to_string(c.gamma.pb) + "." + std::to_string(c.gamma.slot) +
         ",S5=" + std::to_string(c.sigma5) + ",S6=" + std::to_string(c.sigma6);
}

std::string choice_spec_format(const ChoiceII& c) {
  auto g = [](const GammaIndex& x) {
    return "G" + std::to_string(x.pb) + "." + std::to_string(x.slot);
  };
  return g(c.gamma1) + "," + g(c.gamma2) + "," + g(c.gamma3);
}

KsSetRecord make_record(const KsSet& ks, const std::string& choice) {
  KsSetRecord rec;
  rec.type = ks.signature.ray_count();
  rec.bases = ks.basis_ids;
  rec.sigma = ks.sigma;
  std::sort(rec.sigma.begin(), rec.sigma.end());
  rec.signature = ks.signature.str();
  rec.choice = choice;
  rec.generation_order = ks.generation_order;
  return rec;
}

std::string record_to_json(const KsSetRecord& rec) {
  ordered_json j;
  j["type"] = rec.type;
  j["bases"] = rec.bases;
  j["sigma"] = rec.sigma;
  j["signature"] = rec.signature;
  j["provenance"] = ordered_json{{"choice", rec.choice},
                                 {"generation_order", rec.generation_order}};
  return j.dump();
}

KsSetRecord record_from_json(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("bad record JSON: ") + e.what());
  }
  try {
    KsSetRecord rec;
    rec.type = j.at("type").get<int>();
    rec.bases = j.at("bases").get<std::vector<int>>();
    rec.sigma = j.at("sigma").get<std::vector<int>>();
    rec.signature = j.at("signature").get<std::string>();
    rec.choice = j.at("provenance").at("choice").get<std::string>();
    rec.generation_order = j.at("provenance").at("generation_order").get<std::vector<int>>();
    return rec;
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("incomplete record JSON: ") + e.what());
  }
}

std::string export_orthogonality_dot(const BasisTable& table) {
  // Distinct co-occurring pairs, ascending.
  std::vector<std::pair<int, int>> edges;
  for (const Basis& b : table.bases())
    for (std::size_t i = 0; i < b.rays.size(); ++i)
      for (std::size_t k = i + 1; k < b.rays.size(); ++k)
        edges.emplace_back(b.rays[i], b.rays[k]);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::ostringstream out;
  out << "graph orthogonality {\n";
  for (int r = 1; r <= kNumRays; ++r) out << "  r" << r << ";\n";
  for (const auto& [a, b] : edges) out << "  r" << a << " -- r" << b << ";\n";
  out << "}\n";
  return out.str();
}

RayVectorFile parse_ray_vectors(std::istream& in) {
  RayVectorFile file;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<long long> values;
    long long v = 0;
    while (fields >> v) values.push_back(v);
    if (!fields.eof())
      throw ParseError("line " + std::to_string(line_no) + ": non-integer field");
    if (values.empty()) continue;
    if (values.size() != 9)
      throw ParseError("line " + std::to_string(line_no) + ": expected 9 fields, got " +
                       std::to_string(values.size()));
    RayVector ray;
    ray.id = static_cast<int>(values[0]);
    int expected = static_cast<int>(file.rays.size()) + 1;
    if (ray.id != expected)
      throw ParseError("line " + std::to_string(line_no) + ": expected ray id " +
                       std::to_string(expected) + ", got " + std::to_string(ray.id));
    bool nonzero = false;
    for (int k = 0; k < 8; ++k) {
      ray.components[static_cast<std::size_t>(k)] = values[static_cast<std::size_t>(k + 1)];
      if (values[static_cast<std::size_t>(k + 1)] != 0) nonzero = true;
    }
    if (!nonzero)
      throw ParseError("line " + std::to_string(line_no) + ": zero vector for ray " +
                       std::to_string(ray.id));
    if (file.rays.size() == kNumRays)
      throw ParseError("line " + std::to_string(line_no) + ": more than 40 records");
    file.rays.push_back(ray);
  }
  if (file.rays.size() != kNumRays)
    throw ParseError("expected 40 records, got " + std::to_string(file.rays.size()));
  return file;
}

OrthogonalityReport validate_ray_vectors(const BasisTable& table, const RayVectorFile& file) {
  OrthogonalityReport report;
  for (const Basis& b : table.bases()) {
    for (std::size_t i = 0; i < b.rays.size(); ++i) {
      for (std::size_t k = i + 1; k < b.rays.size(); ++k) {
        const RayVector& u = file.rays[static_cast<std::size_t>(b.rays[i] - 1)];
        const RayVector& v = file.rays[static_cast<std::size_t>(b.rays[k] - 1)];
        long long dot = 0;
        for (int d = 0; d < 8; ++d)
          dot += u.components[static_cast<std::size_t>(d)] *
                 v.components[static_cast<std::size_t>(d)];
        ++report.pairs_checked;
        if (dot != 0)
          report.violations.push_back({b.id, b.rays[i], b.rays[k], dot});
      }
    }
  }
  return report;
}

}  // namespace ks
