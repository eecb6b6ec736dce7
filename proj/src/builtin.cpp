#include "hyperlap/builtin.hpp"

#include <cmath>

#include "hyperlap/operators.hpp"
#include "hyperlap/spectra.hpp"
#include "hyperlap/structure.hpp"

namespace hyperlap::builtin {

HypergraphDocument single_reaction_with_catalyst() {
  return {{"v1", "v2", "v3"}, {{"h", {"v1", "v2", "v3"}, {"v3"}}}};
}

HypergraphDocument two_reaction_chain() {
  return {{"v1", "v2", "v3", "v4", "v5"},
          {{"h1", {"v1", "v2"}, {"v3"}}, {"h2", {"v3", "v4"}, {"v5"}}}};
}

HypergraphDocument closed_triangle_system() {
  return {{"v1", "v2", "v3", "v4"},
          {{"h1", {"v1", "v2"}, {"v1"}},
           {"h2", {"v3"}, {"v2"}},
           {"h3", {"v4"}, {"v3", "v4"}}}};
}

HypergraphDocument source_sink_system() {
  return {{"v1", "v2", "v3"},
          {{"h1", {"v1"}, {"v1", "v2"}}, {"h2", {"v2", "v3"}, {"v3"}}}};
}

HypergraphDocument branch_reunite_system() {
  return {{"v1", "v2", "v3", "v4"},
          {{"h1", {"v1"}, {"v2"}},
           {"h2", {"v3"}, {"v1", "v3"}},
           {"h3", {"v1", "v2", "v4"}, {"v4"}}}};
}

HypergraphDocument two_block_system() {
  return {{"v1", "v2", "v3", "v4", "v5", "v6"},
          {{"h1", {"v1", "v2"}, {"v4", "v5"}}, {"h2", {"v5", "v6"}, {"v2", "v3"}}}};
}

HypergraphDocument two_reaction_bipartite() {
  return {{"v1", "v2", "v3", "v4"},
          {{"h1", {"v1", "v2"}, {"v3"}}, {"h2", {"v1"}, {"v4"}}}};
}

HypergraphDocument single_hyperedge(int n, int k, int m) {
  if (n < 1 || k < 1 || m < 1 || k > n || m > n || k + m < n)
    throw Error(errc::infeasible_family, "single_hyperedge: need 1 <= k,m <= n <= k+m");
  HypergraphDocument doc;
  for (int i = 0; i < n; ++i) doc.vertices.push_back("v" + std::to_string(i + 1));
  HyperedgeSpec h;
  h.id = "h";
  for (int i = 0; i < k; ++i) h.inputs.push_back(doc.vertices[i]);
  for (int i = n - m; i < n; ++i) h.outputs.push_back(doc.vertices[i]);
  doc.hyperedges.push_back(std::move(h));
  return doc;
}

HypergraphDocument complete_bipartite_graph(int a, int b) {
  HypergraphDocument doc;
  for (int i = 0; i < a; ++i) doc.vertices.push_back("u" + std::to_string(i + 1));
  for (int j = 0; j < b; ++j) doc.vertices.push_back("w" + std::to_string(j + 1));
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      doc.hyperedges.push_back({"e" + std::to_string(i + 1) + "_" + std::to_string(j + 1),
                                {"u" + std::to_string(i + 1)},
                                {"w" + std::to_string(j + 1)}});
  return doc;
}

HypergraphDocument one_against_all(int n) {
  HypergraphDocument doc;
  for (int i = 0; i < n; ++i) doc.vertices.push_back("v" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) {
    HyperedgeSpec h;
    h.id = "h" + std::to_string(i + 1);
    h.inputs = {doc.vertices[i]};
    for (int j = 0; j < n; ++j)
      if (j != i) h.outputs.push_back(doc.vertices[j]);
    doc.hyperedges.push_back(std::move(h));
  }
  return doc;
}

namespace {

void check(std::vector<ExampleCheck>& rows, const std::string& instance,
           const std::string& quantity, double expected, double computed, double tol) {
  rows.push_back({instance, quantity, expected, computed, tol,
                  std::abs(expected - computed) <= tol});
}

}  // namespace

std::vector<ExampleCheck> run_example_checks() {
  std::vector<ExampleCheck> rows;

  {
    auto g = ChemicalHypergraph::validate(single_reaction_with_catalyst());
    auto sh = spectrum(g, Which::Hyperedge);
    auto sv = spectrum(g, Which::Vertex);
    check(rows, "single-reaction", "mu1_H", 2.0, sh.eigenvalues.front(), 1e-9);
    check(rows, "single-reaction", "m_V", 2.0, double(sv.zero_multiplicity), 0);
    check(rows, "single-reaction", "deg(v3)", 1.0, double(g.degree("v3")), 0);
  }
  {
    auto g = ChemicalHypergraph::validate(two_reaction_chain());
    check(rows, "two-reaction-chain", "components", 1.0,
          double(connected_components(g).size()), 0);
  }
  {
    auto g = ChemicalHypergraph::validate(closed_triangle_system());
    auto report = structural_report(g);
    check(rows, "closed-triangle", "closed_systems", 1.0, double(report.closed_system_count), 0);
    check(rows, "closed-triangle", "m_H", 1.0, double(report.zero_multiplicity_hyperedge), 0);
  }
  {
    auto g = ChemicalHypergraph::validate(source_sink_system());
    auto report = structural_report(g);
    check(rows, "source-sink", "closed_systems", 1.0, double(report.closed_system_count), 0);
    check(rows, "source-sink", "m_H", 1.0, double(report.zero_multiplicity_hyperedge), 0);
  }
  {
    auto g = ChemicalHypergraph::validate(branch_reunite_system());
    auto [m_v, m_h] = zero_multiplicities(g);
    auto report = structural_report(g);
    check(rows, "branch-reunite", "m_V", 2.0, double(m_v), 0);
    check(rows, "branch-reunite", "m_H", 1.0, double(m_h), 0);
    check(rows, "branch-reunite", "closed_systems", 0.0, double(report.closed_system_count), 0);
  }
  {
    auto g = ChemicalHypergraph::validate(two_block_system());
    check(rows, "two-block", "bipartite", 1.0, double(is_bipartite(bipartition(g))), 0);
    check(rows, "two-block", "h_prime", 4.0, to_double(h_prime(g)), 0);
    auto sv = spectrum(g, Which::Vertex);
    check(rows, "two-block", "mu1 >= h_prime", 1.0,
          double(sv.eigenvalues.front() >= 4.0 - 1e-9), 0);
  }
  {
    auto g = ChemicalHypergraph::validate(two_reaction_bipartite());
    auto sh = spectrum(g, Which::Hyperedge);
    const double root_half = 1.0 / std::sqrt(2.0);
    check(rows, "two-reaction-bipartite", "mu1_H", 2 + root_half, sh.eigenvalues[0], 1e-9);
    check(rows, "two-reaction-bipartite", "mu2_H", 2 - root_half, sh.eigenvalues[1], 1e-9);
    check(rows, "two-reaction-bipartite", "h_prime", 2.6, to_double(h_prime(g)), 1e-15);
    check(rows, "two-reaction-bipartite", "m_H", 0.0, double(sh.zero_multiplicity), 0);
    check(rows, "two-reaction-bipartite", "m_V", 2.0,
          double(zero_multiplicities(g).first), 0);
  }
  {
    auto g = ChemicalHypergraph::validate(single_hyperedge(3, 3, 1));
    check(rows, "single-hyperedge(3,3,1)", "mu_H", 2.0,
          spectrum(g, Which::Hyperedge).eigenvalues.front(), 0);
    auto all_cat = ChemicalHypergraph::validate(single_hyperedge(3, 3, 3));
    auto sh = spectrum(all_cat, Which::Hyperedge);
    check(rows, "single-hyperedge(3,3,3)", "mu_H", 0.0, sh.eigenvalues.front(), 0);
    check(rows, "single-hyperedge(3,3,3)", "m_H", 1.0, double(sh.zero_multiplicity), 0);
  }
  {
    auto star = ChemicalHypergraph::validate(complete_bipartite_graph(1, 3));
    auto square = ChemicalHypergraph::validate(complete_bipartite_graph(2, 2));
    auto s1 = spectrum(star, Which::Vertex);
    auto s2 = spectrum(square, Which::Vertex);
    double max_gap = 0;
    for (std::size_t i = 0; i < s1.eigenvalues.size(); ++i)
      max_gap = std::max(max_gap, std::abs(s1.eigenvalues[i] - s2.eigenvalues[i]));
    check(rows, "complete-bipartite(1,3)/(2,2)", "vertex spectrum gap", 0.0, max_gap, 1e-9);
    check(rows, "complete-bipartite(1,3)", "m_H", 0.0,
          double(zero_multiplicities(star).second), 0);
    check(rows, "complete-bipartite(2,2)", "m_H", 1.0,
          double(zero_multiplicities(square).second), 0);
  }
  {
    auto g = ChemicalHypergraph::validate(one_against_all(3));
    check(rows, "one-against-all(3)", "m_V", 0.0, double(zero_multiplicities(g).first), 0);
  }
  return rows;
}

}  // namespace hyperlap::builtin
