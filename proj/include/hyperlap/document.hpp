#ifndef HYPERLAP_DOCUMENT_HPP
#define HYPERLAP_DOCUMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hyperlap {

struct HyperedgeSpec {
  std::string id;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;

  friend bool operator==(const HyperedgeSpec&, const HyperedgeSpec&) = default;
};

/// Plain on-disk form of a hypergraph: a JSON object with a `vertices`
/// array and a `hyperedges` array. List order is meaningful and preserved.
struct HypergraphDocument {
  std::vector<std::string> vertices;
  std::vector<HyperedgeSpec> hyperedges;

  friend bool operator==(const HypergraphDocument&, const HypergraphDocument&) = default;
};

HypergraphDocument parse_document(const std::string& text);
HypergraphDocument load_document(const std::string& path);

/// Canonical serialization: keys sorted, two-space indent, trailing newline.
/// Golden tests compare these bytes directly.
std::string serialize(const HypergraphDocument& doc);
void save_document(const HypergraphDocument& doc, const std::string& path);

enum class Family { Generic, Bipartite, Balanced, AllCatalyst, Graph };

Family family_from_string(const std::string& name);
std::string to_string(Family family);

/// Seed-deterministic instance generator. Family constraints hold by
/// construction: Bipartite instances two-color, Balanced hyperedges have
/// equally many inputs and outputs, Graph hyperedges are single oriented
/// edges with distinct endpoints.
HypergraphDocument random_document(int n_vertices, int n_hyperedges, std::uint64_t seed,
                                   Family family = Family::Generic);

}  // namespace hyperlap

#endif  // HYPERLAP_DOCUMENT_HPP
