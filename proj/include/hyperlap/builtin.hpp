#ifndef HYPERLAP_BUILTIN_HPP
#define HYPERLAP_BUILTIN_HPP

#include <string>
#include <vector>

#include "hyperlap/document.hpp"
#include "hyperlap/hypergraph.hpp"

namespace hyperlap::builtin {

/// Three vertices, one hyperedge: inputs {v1,v2,v3}, outputs {v3};
/// v3 is a catalyst.
HypergraphDocument single_reaction_with_catalyst();

/// Two reactions sharing v3: {v1,v2}->{v3} and {v3,v4}->{v5}. Connected.
HypergraphDocument two_reaction_chain();

/// Three reactions forming a closed loop over v1..v4 (v1 and v4 catalyze
/// their own reactions).
HypergraphDocument closed_triangle_system();

/// Source-sink system: h1 creates v2 with catalyst v1, h2 destroys v2 with
/// catalyst v3. A closed system in which nothing is consumed or produced net.
HypergraphDocument source_sink_system();

/// Branch-and-reunite system on 4 vertices and 3 hyperedges: contains no
/// closed system yet its hyperedges are linearly dependent (m_H = 1).
HypergraphDocument branch_reunite_system();

/// Bipartite instance with blocks {v1,v2,v3} and {v4,v5,v6}, two
/// hyperedges of size 4 each.
HypergraphDocument two_block_system();

/// Bipartite instance with h1: {v1,v2}->{v3}, h2: {v1}->{v4}.
/// Hyperedge spectrum {2 + 1/sqrt(2), 2 - 1/sqrt(2)}, h' = 13/5.
HypergraphDocument two_reaction_bipartite();

/// One hyperedge on n vertices with k inputs and m outputs
/// (k + m - n catalysts). Its only hyperedge eigenvalue is 2n - k - m.
HypergraphDocument single_hyperedge(int n, int k, int m);

/// Complete bipartite graph with parts of size a and b, edges oriented
/// from the first part to the second.
HypergraphDocument complete_bipartite_graph(int a, int b);

/// n hyperedges on n vertices, h_i: input v_i, outputs all v_j (j != i).
/// Has no zero vertex eigenvalue for n > 2.
HypergraphDocument one_against_all(int n);

struct ExampleCheck {
  std::string instance;
  std::string quantity;
  double expected = 0;
  double computed = 0;
  double tolerance = 0;
  bool pass = false;
};

/// Built-in verification table: every bundled instance with its known
/// spectral and structural quantities, recomputed and compared.
std::vector<ExampleCheck> run_example_checks();

}  // namespace hyperlap::builtin

#endif  // HYPERLAP_BUILTIN_HPP
