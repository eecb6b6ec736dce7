#include "hyperlap/document.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hyperlap/types.hpp"

namespace hyperlap {

namespace {

std::vector<std::string> string_array(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw Error(errc::syntax_error, std::string("expected array field '") + key + "'");
  std::vector<std::string> out;
  for (const auto& item : j[key]) {
    if (!item.is_string())
      throw Error(errc::syntax_error, std::string("non-string entry in '") + key + "'");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

HypergraphDocument parse_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(errc::syntax_error, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(errc::syntax_error, "document root must be an object");

  HypergraphDocument doc;
  doc.vertices = string_array(j, "vertices");
  if (!j.contains("hyperedges") || !j["hyperedges"].is_array())
    throw Error(errc::syntax_error, "expected array field 'hyperedges'");
  for (const auto& hj : j["hyperedges"]) {
    if (!hj.is_object()) throw Error(errc::syntax_error, "hyperedge entries must be objects");
    HyperedgeSpec h;
    if (!hj.contains("id") || !hj["id"].is_string())
      throw Error(errc::syntax_error, "hyperedge missing string field 'id'");
    h.id = hj["id"].get<std::string>();
    h.inputs = string_array(hj, "inputs");
    h.outputs = string_array(hj, "outputs");
    doc.hyperedges.push_back(std::move(h));
  }
  return doc;
}

HypergraphDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::io_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string serialize(const HypergraphDocument& doc) {
  // nlohmann::json keeps object keys sorted, which is exactly the
  // canonical form the golden tests pin down.
  nlohmann::json j;
  j["vertices"] = doc.vertices;
  j["hyperedges"] = nlohmann::json::array();
  for (const auto& h : doc.hyperedges)
    j["hyperedges"].push_back({{"id", h.id}, {"inputs", h.inputs}, {"outputs", h.outputs}});
  return j.dump(2) + "\n";
}

void save_document(const HypergraphDocument& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(errc::io_error, "cannot write '" + path + "'");
  out << serialize(doc);
}

Family family_from_string(const std::string& name) {
  if (name == "generic") return Family::Generic;
  if (name == "bipartite") return Family::Bipartite;
  if (name == "balanced") return Family::Balanced;
  if (name == "all-catalyst") return Family::AllCatalyst;
  if (name == "graph") return Family::Graph;
  throw Error(errc::infeasible_family, "unknown family '" + name + "'");
}

std::string to_string(Family family) {
  switch (family) {
    case Family::Generic: return "generic";
    case Family::Bipartite: return "bipartite";
    case Family::Balanced: return "balanced";
    case Family::AllCatalyst: return "all-catalyst";
    case Family::Graph: return "graph";
  }
  return "generic";
}

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // Bounded draw via modulo: bias is irrelevant here, determinism is not.
  int below(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

  std::vector<int> distinct(const std::vector<int>& pool, int k) {
    std::vector<int> scratch = pool;
    std::vector<int> picked;
    for (int i = 0; i < k; ++i) {
      int j = below(static_cast<int>(scratch.size()));
      picked.push_back(scratch[j]);
      scratch.erase(scratch.begin() + j);
    }
    std::sort(picked.begin(), picked.end());
    return picked;
  }

  std::vector<int> nonempty_subset(const std::vector<int>& pool) {
    return distinct(pool, 1 + below(static_cast<int>(pool.size())));
  }

 private:
  std::mt19937_64 rng_;
};

std::vector<std::string> names(const std::vector<int>& idx) {
  std::vector<std::string> out;
  for (int i : idx) out.push_back("v" + std::to_string(i + 1));
  return out;
}

}  // namespace

HypergraphDocument random_document(int n_vertices, int n_hyperedges, std::uint64_t seed,
                                   Family family) {
  if (n_vertices < 1)
    throw Error(errc::infeasible_family, "need at least one vertex");
  if (n_hyperedges < 0)
    throw Error(errc::infeasible_family, "negative hyperedge count");
  if ((family == Family::Bipartite || family == Family::Graph) && n_vertices < 2 &&
      n_hyperedges > 0)
    throw Error(errc::infeasible_family,
                to_string(family) + " family needs at least two vertices");

  Sampler s(seed);
  HypergraphDocument doc;
  for (int i = 0; i < n_vertices; ++i) doc.vertices.push_back("v" + std::to_string(i + 1));

  std::vector<int> all(n_vertices);
  for (int i = 0; i < n_vertices; ++i) all[i] = i;

  std::vector<int> block1, block2;
  if (family == Family::Bipartite && n_hyperedges > 0) {
    // Contiguous split; the cut point is the seed-dependent part.
    int cut = 1 + s.below(n_vertices - 1);
    block1.assign(all.begin(), all.begin() + cut);
    block2.assign(all.begin() + cut, all.end());
  }

  for (int j = 0; j < n_hyperedges; ++j) {
    HyperedgeSpec h;
    h.id = "h" + std::to_string(j + 1);
    switch (family) {
      case Family::Generic:
        h.inputs = names(s.nonempty_subset(all));
        h.outputs = names(s.nonempty_subset(all));
        break;
      case Family::Bipartite: {
        auto a = names(s.nonempty_subset(block1));
        auto b = names(s.nonempty_subset(block2));
        if (s.below(2) == 0) {
          h.inputs = a;
          h.outputs = b;
        } else {
          h.inputs = b;
          h.outputs = a;
        }
        break;
      }
      case Family::Balanced: {
        int k = 1 + s.below(n_vertices);
        h.inputs = names(s.distinct(all, k));
        h.outputs = names(s.distinct(all, k));
        break;
      }
      case Family::AllCatalyst: {
        auto sub = names(s.nonempty_subset(all));
        h.inputs = sub;
        h.outputs = sub;
        break;
      }
      case Family::Graph: {
        auto pair = s.distinct(all, 2);
        if (s.below(2) == 1) std::swap(pair[0], pair[1]);
        h.inputs = {"v" + std::to_string(pair[0] + 1)};
        h.outputs = {"v" + std::to_string(pair[1] + 1)};
        break;
      }
    }
    doc.hyperedges.push_back(std::move(h));
  }
  return doc;
}

}  // namespace hyperlap
