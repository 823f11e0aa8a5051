#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "ks/generators.hpp"
#include "ks/io.hpp"
#include "ks/tables.hpp"
#include "ks/verifier.hpp"

#include <nlohmann/json.hpp>

namespace {

using ks::BasisTable;
using ks::GammaTable;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_basis_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ks::ParseError("bad basis id: '" + tok + "'");
    }
  }
  if (out.empty()) throw ks::ParseError("empty basis list");
  return out;
}

void print_tables_text(const BasisTable& table, const GammaTable& gammas, std::ostream& out) {
  out << "Bases (1-5 pure, 6-25 hybrid):\n";
  for (const ks::Basis& b : table.bases()) {
    out << "  " << b.id << ":";
    for (int r : b.rays) out << " " << r;
    out << "\n";
  }
  out << "Gamma sets (pure basis.slot -> rays):\n";
  for (const ks::GammaSet& g : gammas.all()) {
    out << "  G" << g.pb << "." << g.slot << ":";
    for (int r : g.rays) out << " " << r;
    out << "\n";
  }
}

void print_tables_json(const BasisTable& table, const GammaTable& gammas, std::ostream& out) {
  ordered_json j;
  j["bases"] = ordered_json::array();
  for (const ks::Basis& b : table.bases())
    j["bases"].push_back(ordered_json{{"id", b.id},
                                      {"kind", b.pure() ? "pure" : "hybrid"},
                                      {"rays", b.rays}});
  j["gamma_sets"] = ordered_json::array();
  for (const ks::GammaSet& g : gammas.all())
    j["gamma_sets"].push_back(ordered_json{{"pb", g.pb}, {"slot", g.slot}, {"rays", g.rays}});
  out << j.dump(2) << "\n";
}

void print_certificate(const ks::ParityCertificate& cert, std::ostream& out) {
  ordered_json j;
  j["bases"] = cert.basis_ids;
  j["valid"] = cert.valid;
  ordered_json mult = ordered_json::object();
  for (int r = 1; r <= ks::kNumRays; ++r) {
    int m = cert.multiplicity[static_cast<std::size_t>(r)];
    if (m != 0) mult[std::to_string(r)] = m;
  }
  j["multiplicity"] = mult;
  j["signature"] = cert.signature ? ordered_json(cert.signature->str()) : ordered_json(nullptr);
  out << j.dump() << "\n";
}

int run_generate(int type, const std::string& choice, bool all) {
  const BasisTable& table = BasisTable::builtin();
  GammaTable gammas = ks::derive_gamma_table(table);

  if (all) {
    ks::Enumeration e;
    std::size_t expected = 0;
    if (type == 36) {
      e = ks::enumerate_I(table, gammas);
      expected = 320;
    } else if (type == 38) {
      e = ks::enumerate_II(table, gammas);
      expected = 640;
    } else {
      e = ks::enumerate_III(table, gammas);
      expected = 64;
    }
    for (const ks::KsSet& ks_set : e.sets)
      std::cout << ks::record_to_json(ks::make_record(ks_set, "")) << "\n";
    if (e.sets.size() != expected) {
      std::cerr << "enumeration produced " << e.sets.size() << " sets, expected "
                << expected << "\n";
      return kExitVerificationFailure;
    }
    return kExitOk;
  }

  auto parsed = ks::choice_spec_parse(choice, type);
  ks::KsSet ks_set;
  if (type == 36)
    ks_set = ks::run_algorithm_I(table, gammas, std::get<ks::ChoiceI>(parsed));
  else if (type == 38)
    ks_set = ks::run_algorithm_II(table, gammas, std::get<ks::ChoiceII>(parsed));
  else
    ks_set = ks::run_algorithm_III(table, gammas, std::get<ks::ChoiceII>(parsed));
  std::cout << ks::record_to_json(ks::make_record(ks_set, choice)) << "\n";
  return kExitOk;
}

int run_oracle(bool summary) {
  const BasisTable& table = BasisTable::builtin();
  ks::OracleResult result = ks::oracle_enumerate(table);

  std::map<int, std::size_t> by_count;
  for (const auto& [sig, sets] : result.by_signature)
    by_count[sig.n_bases] += sets.size();

  std::ostringstream line;
  for (const auto& [n, count] : by_count) line << n << ":" << count << " ";
  line << "total:" << result.total();
  std::cout << line.str() << "\n";

  if (!summary) {
    for (const auto& [sig, sets] : result.by_signature)
      for (const ks::KsSet& ks_set : sets)
        std::cout << ks::record_to_json(ks::make_record(ks_set, "")) << "\n";
  }

  bool expected = by_count.size() == 3 && by_count[11] == 320 && by_count[13] == 640 &&
                  by_count[15] == 64;
  if (!expected) {
    std::cerr << "oracle counts differ from 320/640/64\n";
    return kExitVerificationFailure;
  }
  return kExitOk;
}

int run_validate_rays(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return kExitUsage;
  }
  ks::RayVectorFile file = ks::parse_ray_vectors(in);
  ks::OrthogonalityReport report = ks::validate_ray_vectors(BasisTable::builtin(), file);
  if (report.ok()) {
    std::cout << "all 25 bases orthogonal (" << report.pairs_checked << " pairs)\n";
    return kExitOk;
  }
  for (const auto& v : report.violations)
    std::cerr << "basis " << v.basis_id << ": rays " << v.ray_a << " and " << v.ray_b
              << " have dot product " << v.dot << "\n";
  return kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parity-proof KS set generator for the 40-ray three-qubit system"};
  app.require_subcommand(1);

  auto* tables_cmd = app.add_subcommand("tables", "Print the basis table and gamma sets");
  std::string tables_format = "text";
  tables_cmd->add_option("--format", tables_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* generate_cmd = app.add_subcommand("generate", "Run one choice or a full enumeration");
  int gen_type = 0;
  std::string gen_choice;
  bool gen_all = false;
  generate_cmd->add_option("--type", gen_type, "KS set ray count")
      ->required()
      ->check(CLI::IsMember({36, 38, 40}));
  generate_cmd->add_option("--choice", gen_choice, "choice spec, e.g. G1.1,S5=13,S6=23");
  generate_cmd->add_flag("--all", gen_all, "enumerate the full choice space");

  auto* verify_cmd = app.add_subcommand("verify", "Print a parity certificate");
  std::string verify_bases;
  verify_cmd->add_option("--bases", verify_bases, "comma-separated basis ids")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive scan of all basis subsets");
  bool oracle_summary = false;
  oracle_cmd->add_flag("--summary", oracle_summary, "print only per-signature counts");

  auto* color_cmd = app.add_subcommand("check-color", "Noncolourability check");
  std::string color_bases;
  color_cmd->add_option("--bases", color_bases, "comma-separated basis ids")->required();

  auto* rays_cmd = app.add_subcommand("validate-rays", "Check ray vectors against the bases");
  std::string rays_file;
  rays_cmd->add_option("--file", rays_file, "ray vector file")->required();

  auto* graph_cmd = app.add_subcommand("export-graph", "Emit the 40-node orthogonality graph");
  std::string graph_format = "dot";
  graph_cmd->add_option("--format", graph_format, "output format")
      ->check(CLI::IsMember({"dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (tables_cmd->parsed()) {
      const BasisTable& table = BasisTable::builtin();
      GammaTable gammas = ks::derive_gamma_table(table);
      if (tables_format == "json")
        print_tables_json(table, gammas, std::cout);
      else
        print_tables_text(table, gammas, std::cout);
      return kExitOk;
    }
    if (generate_cmd->parsed()) {
      if (gen_all == !gen_choice.empty()) {
        std::cerr << "generate needs exactly one of --choice or --all\n";
        return kExitUsage;
      }
      return run_generate(gen_type, gen_choice, gen_all);
    }
    if (verify_cmd->parsed()) {
      ks::ParityCertificate cert =
          ks::verify_parity(BasisTable::builtin(), parse_basis_list(verify_bases));
      print_certificate(cert, std::cout);
      return cert.valid ? kExitOk : kExitVerificationFailure;
    }
    if (oracle_cmd->parsed()) return run_oracle(oracle_summary);
    if (color_cmd->parsed()) {
      bool noncolourable =
          ks::noncolourability_check(BasisTable::builtin(), parse_basis_list(color_bases));
      std::cout << (noncolourable ? "noncolourable" : "colourable") << "\n";
      return noncolourable ? kExitOk : kExitVerificationFailure;
    }
    if (rays_cmd->parsed()) return run_validate_rays(rays_file);
    if (graph_cmd->parsed()) {
      std::cout << ks::export_orthogonality_dot(BasisTable::builtin());
      return kExitOk;
    }
  } catch (const ks::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ks::InvalidChoice& e) {
    std::cerr << "invalid choice: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
