#include "hyperlap/structure.hpp"

#include <algorithm>

#include "hyperlap/operators.hpp"
#include "hyperlap/spectra.hpp"

namespace hyperlap {

namespace {

/// Per-vertex (input count - output count) tally over a subset; catalysts
/// add to both sides and never unbalance.
class BalanceTally {
 public:
  explicit BalanceTally(const ChemicalHypergraph& g) : g_(g), delta_(g.vertex_count(), 0) {}

  void add(Eigen::Index j, int sign) {
    const Hyperedge& h = g_.hyperedges()[j];
    for (const auto& v : h.inputs) bump(g_.vertex_index(v), sign);
    for (const auto& v : h.outputs) bump(g_.vertex_index(v), -sign);
  }

  bool balanced() const { return unbalanced_ == 0; }

 private:
  void bump(Eigen::Index i, int by) {
    if (delta_[i] != 0) --unbalanced_;
    delta_[i] += by;
    if (delta_[i] != 0) ++unbalanced_;
  }

  const ChemicalHypergraph& g_;
  std::vector<int> delta_;
  int unbalanced_ = 0;
};

ClosedSystem make_system(const ChemicalHypergraph& g, const std::vector<Eigen::Index>& subset) {
  ClosedSystem s;
  std::vector<bool> in_subset(g.hyperedge_count(), false);
  for (Eigen::Index j : subset) {
    s.hyperedge_ids.push_back(g.hyperedges()[j].id);
    in_subset[j] = true;
  }
  for (const auto& v : g.vertices()) {
    for (Eigen::Index j = 0; j < g.hyperedge_count(); ++j) {
      const Hyperedge& h = g.hyperedges()[j];
      if (in_subset[j] && (h.is_input(v) || h.is_output(v))) {
        s.induced_vertices.push_back(v);
        break;
      }
    }
  }
  return s;
}

}  // namespace

bool is_closed_system(const ChemicalHypergraph& g, const std::vector<std::string>& ids) {
  if (ids.empty()) throw Error(errc::empty_subset, "closed-system test needs hyperedges");
  BalanceTally tally(g);
  for (const auto& id : ids) tally.add(g.hyperedge_index(id), 1);
  return tally.balanced();
}

std::vector<ClosedSystem> enumerate_closed_systems(const ChemicalHypergraph& g, int max_edges) {
  const Eigen::Index m = g.hyperedge_count();
  if (m > max_edges)
    throw Error(errc::too_many_hyperedges,
                "closed-system enumeration capped at " + std::to_string(max_edges) +
                    " hyperedges (instance has " + std::to_string(m) + ")");

  std::vector<ClosedSystem> found;
  BalanceTally tally(g);
  std::vector<Eigen::Index> current;

  // Depth-first over index sequences yields lexicographic subset order.
  auto recurse = [&](auto&& self, Eigen::Index start) -> void {
    for (Eigen::Index j = start; j < m; ++j) {
      tally.add(j, 1);
      current.push_back(j);
      if (tally.balanced()) found.push_back(make_system(g, current));
      self(self, j + 1);
      current.pop_back();
      tally.add(j, -1);
    }
  };
  recurse(recurse, 0);
  return found;
}

Eigen::Index independence_rank(const ChemicalHypergraph& g,
                               const std::vector<ClosedSystem>& systems) {
  if (systems.empty()) return 0;
  RationalMatrix a =
      RationalMatrix::Zero(static_cast<Eigen::Index>(systems.size()), g.hyperedge_count());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (const auto& id : systems[i].hyperedge_ids) a(i, g.hyperedge_index(id)) = 1;
  return exact_rank(a);
}

bool is_graph(const ChemicalHypergraph& g) {
  for (const auto& h : g.hyperedges())
    if (h.inputs.size() != 1 || h.outputs.size() != 1 || h.inputs.front() == h.outputs.front())
      return false;
  return true;
}

StructuralReport structural_report(const ChemicalHypergraph& g, int max_edges) {
  StructuralReport report;
  auto systems = enumerate_closed_systems(g, max_edges);
  report.closed_system_count = systems.size();
  report.independence_rank = independence_rank(g, systems);
  report.zero_multiplicity_hyperedge = zero_multiplicities(g).second;
  report.bound_satisfied = report.independence_rank <= report.zero_multiplicity_hyperedge;
  if (is_graph(g)) {
    Eigen::Index components = static_cast<Eigen::Index>(connected_components(g).size());
    report.graph_cycle_space_dim = g.hyperedge_count() - g.vertex_count() + components;
  }
  return report;
}

}  // namespace hyperlap
