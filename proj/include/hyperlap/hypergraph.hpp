#ifndef HYPERLAP_HYPERGRAPH_HPP
#define HYPERLAP_HYPERGRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "hyperlap/document.hpp"
#include "hyperlap/types.hpp"

namespace hyperlap {

/// One reaction: a pair of vertex classes. The stored (inputs, outputs)
/// pair is the "+" orientation; the "-" orientation is never materialized,
/// reorientation only ever enters formulas as a sign.
struct Hyperedge {
  std::string id;
  std::vector<std::string> inputs;   // duplicate-free, declaration order
  std::vector<std::string> outputs;  // duplicate-free, declaration order

  bool is_input(const std::string& v) const;
  bool is_output(const std::string& v) const;
  bool is_catalyst(const std::string& v) const { return is_input(v) && is_output(v); }

  std::vector<std::string> catalysts() const;

  /// |inputs ∪ outputs|; catalysts counted once.
  std::size_t size() const;
};

/// Validated chemical hypergraph. Immutable after construction; all
/// free functions below are pure.
class ChemicalHypergraph {
 public:
  /// Full validation: every hyperedge must have a nonempty input set and
  /// a nonempty output set, all ids unique, all vertex references known.
  static ChemicalHypergraph validate(const HypergraphDocument& doc);

  /// Same checks except that one side of a hyperedge may be empty. Only
  /// vertex-flip transforms produce such instances; spectral operators
  /// accept them (an empty side contributes an empty sum).
  static ChemicalHypergraph validate_relaxed(const HypergraphDocument& doc);

  Eigen::Index vertex_count() const { return static_cast<Eigen::Index>(vertices_.size()); }
  Eigen::Index hyperedge_count() const { return static_cast<Eigen::Index>(hyperedges_.size()); }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Hyperedge>& hyperedges() const { return hyperedges_; }

  Eigen::Index vertex_index(const std::string& v) const;          // throws unknown_vertex
  std::optional<Eigen::Index> find_vertex(const std::string& v) const;
  Eigen::Index hyperedge_index(const std::string& id) const;      // throws unknown_hyperedge

  /// Number of hyperedges containing v; a catalyst counts once per hyperedge.
  int degree(const std::string& v) const { return degrees_[vertex_index(v)]; }
  int degree(Eigen::Index i) const { return degrees_[i]; }

  /// True when some hyperedge has an empty side (flip-generated instance).
  bool relaxed() const { return relaxed_; }

  HypergraphDocument to_document() const;

 private:
  ChemicalHypergraph() = default;
  static ChemicalHypergraph build(const HypergraphDocument& doc, bool strict);

  std::vector<std::string> vertices_;
  std::vector<Hyperedge> hyperedges_;
  std::vector<int> degrees_;
  std::unordered_map<std::string, Eigen::Index> vertex_index_;
  std::unordered_map<std::string, Eigen::Index> hyperedge_index_;
  bool relaxed_ = false;
};

struct Component {
  std::vector<std::string> vertices;    // declaration order
  std::vector<std::string> hyperedges;  // declaration order
};

/// Partition of V into connected components; each hyperedge is listed with
/// the component that contains its vertex set. Components appear in order
/// of their first-declared vertex.
std::vector<Component> connected_components(const ChemicalHypergraph& g);

struct Bipartition {
  std::vector<std::string> first;   // V1
  std::vector<std::string> second;  // V2
};

/// Conflict witness: replaying the constraints of the listed hyperedges
/// forces both signs onto `vertex`.
struct BipartitionConflict {
  std::string vertex;
  std::vector<std::string> chain;
};

using BipartitenessResult = std::variant<Bipartition, BipartitionConflict>;

inline bool is_bipartite(const BipartitenessResult& r) {
  return std::holds_alternative<Bipartition>(r);
}

/// Two-coloring such that each hyperedge has all inputs in one block and
/// all outputs in the other. Deterministic: the lexicographically least
/// vertex of each component lands in V1. Any catalyst is an immediate
/// conflict.
BipartitenessResult bipartition(const ChemicalHypergraph& g);

/// Exchange v's input/output membership in every hyperedge containing it.
/// Catalysts are fixed points. The result may have hyperedges with one
/// empty side and is therefore only relaxed-validated; rerun validate()
/// before treating it as a chemical hypergraph proper.
ChemicalHypergraph flip_vertex(const ChemicalHypergraph& g, const std::string& v);

/// Σ_h |h|² / Σ_h |h|. Lower bound for the largest eigenvalue on
/// bipartite instances; equals 2 on graphs and N when every |h| = N.
Rational h_prime(const ChemicalHypergraph& g);

}  // namespace hyperlap

#endif  // HYPERLAP_HYPERGRAPH_HPP
