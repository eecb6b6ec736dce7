#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hyperlap/builtin.hpp"
#include "hyperlap/document.hpp"
#include "hyperlap/hypergraph.hpp"
#include "hyperlap/report.hpp"
#include "hyperlap/spectra.hpp"

namespace {

constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNumericError = 3;

int closed_system_cap_from_env() {
  const char* value = std::getenv("HYPERLAP_CLOSED_SYSTEM_CAP");
  if (!value) return hyperlap::kDefaultClosedSystemCap;
  return std::atoi(value);
}

hyperlap::ChemicalHypergraph load(const std::string& path) {
  return hyperlap::ChemicalHypergraph::validate(hyperlap::load_document(path));
}

void print_spectrum_line(const hyperlap::Spectrum& s) {
  const char* label = s.op == hyperlap::Which::Vertex ? "m_V" : "m_H";
  std::cout << hyperlap::format_eigenvalues(s.eigenvalues) << "; " << label << " = "
            << s.zero_multiplicity << "\n";
}

nlohmann::json spectrum_json(const hyperlap::Spectrum& s) {
  return {{"operator", s.op == hyperlap::Which::Vertex ? "vertex" : "hyperedge"},
          {"eigenvalues", s.eigenvalues},
          {"zero_multiplicity", s.zero_multiplicity}};
}

int cmd_spectrum(const std::string& path, const std::string& op, bool as_json) {
  auto g = load(path);
  bool want_vertex = op == "vertex" || op == "both";
  bool want_hyperedge = op == "hyperedge" || op == "both";
  nlohmann::json j = nlohmann::json::array();
  if (want_vertex) {
    auto s = hyperlap::spectrum(g, hyperlap::Which::Vertex);
    if (as_json)
      j.push_back(spectrum_json(s));
    else
      print_spectrum_line(s);
  }
  if (want_hyperedge) {
    auto s = hyperlap::spectrum(g, hyperlap::Which::Hyperedge);
    if (as_json)
      j.push_back(spectrum_json(s));
    else
      print_spectrum_line(s);
  }
  if (as_json) std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_report(const std::string& path, bool as_json) {
  auto g = load(path);
  auto report = hyperlap::build_report(g, closed_system_cap_from_env());
  if (as_json)
    std::cout << hyperlap::to_json(report).dump(2) << "\n";
  else
    std::cout << hyperlap::format_text(report);
  return report.all_checks_pass() ? 0 : kExitCheckFailure;
}

int cmd_random(int n, int m, std::uint64_t seed, const std::string& family) {
  auto doc = hyperlap::random_document(n, m, seed, hyperlap::family_from_string(family));
  std::cout << hyperlap::serialize(doc);
  return 0;
}

int cmd_flip(const std::string& path, const std::string& vertex) {
  auto g = load(path);
  std::cout << hyperlap::serialize(hyperlap::flip_vertex(g, vertex).to_document());
  return 0;
}

int cmd_verify(const std::string& path) {
  auto g = load(path);
  auto failures = hyperlap::verify_instance(g);
  if (failures.empty()) {
    std::cout << "all invariants hold\n";
    return 0;
  }
  std::cout << "violated: " << failures.front() << "\n";
  return kExitCheckFailure;
}

int cmd_examples() {
  auto rows = hyperlap::builtin::run_example_checks();
  bool all_pass = true;
  std::printf("%-32s %-24s %14s %14s %10s  %s\n", "instance", "quantity", "expected",
              "computed", "|delta|", "status");
  for (const auto& row : rows) {
    all_pass = all_pass && row.pass;
    std::printf("%-32s %-24s %14.9g %14.9g %10.2e  %s\n", row.instance.c_str(),
                row.quantity.c_str(), row.expected, row.computed,
                std::abs(row.expected - row.computed), row.pass ? "pass" : "FAIL");
  }
  return all_pass ? 0 : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normalized Laplace operators for chemical hypergraphs"};
  app.require_subcommand(1);

  std::string path, vertex;
  std::string op = "both", family = "generic";
  bool as_json = false;
  int n_vertices = 0, n_hyperedges = 0;
  std::uint64_t seed = 0;

  auto* sc_spectrum = app.add_subcommand("spectrum", "Eigenvalues of one or both Laplacians");
  sc_spectrum->add_option("file", path)->required();
  sc_spectrum->add_option("--operator", op)
      ->check(CLI::IsMember({"vertex", "hyperedge", "both"}));
  sc_spectrum->add_flag("--json", as_json);

  auto* sc_report = app.add_subcommand("report", "Full structural and spectral report");
  sc_report->add_option("file", path)->required();
  sc_report->add_flag("--json", as_json);

  auto* sc_random = app.add_subcommand("random", "Generate a seeded random instance");
  sc_random->add_option("--vertices", n_vertices)->required();
  sc_random->add_option("--hyperedges", n_hyperedges)->required();
  sc_random->add_option("--seed", seed)->required();
  sc_random->add_option("--family", family)
      ->check(CLI::IsMember({"generic", "bipartite", "balanced", "all-catalyst", "graph"}));

  auto* sc_flip = app.add_subcommand("flip", "Reverse one vertex's role everywhere");
  sc_flip->add_option("file", path)->required();
  sc_flip->add_option("--vertex", vertex)->required();

  auto* sc_verify = app.add_subcommand("verify", "Run the invariant suite on one instance");
  sc_verify->add_option("file", path)->required();

  auto* sc_examples = app.add_subcommand("examples", "Check the built-in instance table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (sc_spectrum->parsed()) return cmd_spectrum(path, op, as_json);
    if (sc_report->parsed()) return cmd_report(path, as_json);
    if (sc_random->parsed()) return cmd_random(n_vertices, n_hyperedges, seed, family);
    if (sc_flip->parsed()) return cmd_flip(path, vertex);
    if (sc_verify->parsed()) return cmd_verify(path);
    if (sc_examples->parsed()) return cmd_examples();
  } catch (const hyperlap::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hyperlap::is_input_error(e.code()) ? kExitInputError : kExitNumericError;
  }
  return 0;
}
