#ifndef HYPERLAP_STRUCTURE_HPP
#define HYPERLAP_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/types.hpp"

namespace hyperlap {

inline constexpr int kDefaultClosedSystemCap = 20;

/// Nonempty hyperedge subset whose induced vertices each appear as often
/// as input as as output; generalizes oriented cycles.
struct ClosedSystem {
  std::vector<std::string> hyperedge_ids;    // declaration order
  std::vector<std::string> induced_vertices; // declaration order
};

/// Balance test at every induced vertex; equivalently, the incidence
/// matrix annihilates the subset's indicator vector.
bool is_closed_system(const ChemicalHypergraph& g, const std::vector<std::string>& ids);

/// All closed systems, in lexicographic subset order over hyperedge
/// indices. Refuses with too_many_hyperedges beyond the cap rather than
/// subsampling.
std::vector<ClosedSystem> enumerate_closed_systems(const ChemicalHypergraph& g,
                                                   int max_edges = kDefaultClosedSystemCap);

/// Exact rank of the K×M 0/1 system matrix whose rows are the systems'
/// indicator vectors.
Eigen::Index independence_rank(const ChemicalHypergraph& g,
                               const std::vector<ClosedSystem>& systems);

struct StructuralReport {
  std::size_t closed_system_count = 0;
  Eigen::Index independence_rank = 0;
  Eigen::Index zero_multiplicity_hyperedge = 0;  // m_H
  bool bound_satisfied = false;                  // independence_rank <= m_H
  /// For graphs: |E| - |V| + components, the cycle-space dimension that
  /// m_H is expected to equal.
  std::optional<Eigen::Index> graph_cycle_space_dim;
};

StructuralReport structural_report(const ChemicalHypergraph& g,
                                   int max_edges = kDefaultClosedSystemCap);

/// True when every hyperedge has exactly one input and one output and no
/// catalyst, i.e. the instance is an oriented graph.
bool is_graph(const ChemicalHypergraph& g);

}  // namespace hyperlap

#endif  // HYPERLAP_STRUCTURE_HPP
