#include "hyperlap/hypergraph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <unordered_set>

namespace hyperlap {

bool Hyperedge::is_input(const std::string& v) const {
  return std::find(inputs.begin(), inputs.end(), v) != inputs.end();
}

bool Hyperedge::is_output(const std::string& v) const {
  return std::find(outputs.begin(), outputs.end(), v) != outputs.end();
}

std::vector<std::string> Hyperedge::catalysts() const {
  std::vector<std::string> out;
  for (const auto& v : inputs)
    if (is_output(v)) out.push_back(v);
  return out;
}

std::size_t Hyperedge::size() const {
  std::size_t n = inputs.size();
  for (const auto& v : outputs)
    if (!is_input(v)) ++n;
  return n;
}

namespace {

void check_token(const std::string& token, const char* what) {
  if (token.empty()) throw Error(errc::syntax_error, std::string("empty ") + what);
  for (char c : token)
    if (std::isspace(static_cast<unsigned char>(c)))
      throw Error(errc::syntax_error,
                  std::string(what) + " '" + token + "' contains whitespace");
}

}  // namespace

ChemicalHypergraph ChemicalHypergraph::validate(const HypergraphDocument& doc) {
  return build(doc, /*strict=*/true);
}

ChemicalHypergraph ChemicalHypergraph::validate_relaxed(const HypergraphDocument& doc) {
  return build(doc, /*strict=*/false);
}

ChemicalHypergraph ChemicalHypergraph::build(const HypergraphDocument& doc, bool strict) {
  ChemicalHypergraph g;
  g.vertices_ = doc.vertices;
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(g.vertices_.size()); ++i) {
    check_token(g.vertices_[i], "vertex id");
    if (!g.vertex_index_.emplace(g.vertices_[i], i).second)
      throw Error(errc::duplicate_id, "duplicate vertex id '" + g.vertices_[i] + "'");
  }

  g.degrees_.assign(g.vertices_.size(), 0);
  for (const auto& spec : doc.hyperedges) {
    check_token(spec.id, "hyperedge id");
    Hyperedge h{spec.id, spec.inputs, spec.outputs};
    if (strict && h.inputs.empty())
      throw Error(errc::empty_input_set, "hyperedge '" + h.id + "' has no inputs");
    if (strict && h.outputs.empty())
      throw Error(errc::empty_output_set, "hyperedge '" + h.id + "' has no outputs");
    if (h.inputs.empty() || h.outputs.empty()) g.relaxed_ = true;

    std::unordered_set<std::string> members;
    for (const auto* side : {&h.inputs, &h.outputs}) {
      std::unordered_set<std::string> seen;
      for (const auto& v : *side) {
        if (!g.vertex_index_.count(v))
          throw Error(errc::unknown_vertex,
                      "hyperedge '" + h.id + "' references unknown vertex '" + v + "'");
        if (!seen.insert(v).second)
          throw Error(errc::duplicate_id,
                      "vertex '" + v + "' repeated within one side of '" + h.id + "'");
        members.insert(v);
      }
    }
    for (const auto& v : members) ++g.degrees_[g.vertex_index_.at(v)];

    Eigen::Index j = static_cast<Eigen::Index>(g.hyperedges_.size());
    if (!g.hyperedge_index_.emplace(h.id, j).second)
      throw Error(errc::duplicate_id, "duplicate hyperedge id '" + h.id + "'");
    g.hyperedges_.push_back(std::move(h));
  }
  return g;
}

Eigen::Index ChemicalHypergraph::vertex_index(const std::string& v) const {
  auto it = vertex_index_.find(v);
  if (it == vertex_index_.end())
    throw Error(errc::unknown_vertex, "unknown vertex '" + v + "'");
  return it->second;
}

std::optional<Eigen::Index> ChemicalHypergraph::find_vertex(const std::string& v) const {
  auto it = vertex_index_.find(v);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

Eigen::Index ChemicalHypergraph::hyperedge_index(const std::string& id) const {
  auto it = hyperedge_index_.find(id);
  if (it == hyperedge_index_.end())
    throw Error(errc::unknown_hyperedge, "unknown hyperedge '" + id + "'");
  return it->second;
}

HypergraphDocument ChemicalHypergraph::to_document() const {
  HypergraphDocument doc;
  doc.vertices = vertices_;
  for (const auto& h : hyperedges_) doc.hyperedges.push_back({h.id, h.inputs, h.outputs});
  return doc;
}

namespace {

/// Vertices of h in declaration order of the hyperedge, catalysts once.
std::vector<std::string> members_of(const Hyperedge& h) {
  std::vector<std::string> out = h.inputs;
  for (const auto& v : h.outputs)
    if (!h.is_input(v)) out.push_back(v);
  return out;
}

}  // namespace

std::vector<Component> connected_components(const ChemicalHypergraph& g) {
  const Eigen::Index n = g.vertex_count();
  std::vector<int> label(n, -1);

  // vertex -> incident hyperedges
  std::vector<std::vector<Eigen::Index>> incident(n);
  for (Eigen::Index j = 0; j < g.hyperedge_count(); ++j)
    for (const auto& v : members_of(g.hyperedges()[j]))
      incident[g.vertex_index(v)].push_back(j);

  int next = 0;
  for (Eigen::Index start = 0; start < n; ++start) {
    if (label[start] >= 0) continue;
    int comp = next++;
    std::deque<Eigen::Index> queue{start};
    label[start] = comp;
    while (!queue.empty()) {
      Eigen::Index v = queue.front();
      queue.pop_front();
      for (Eigen::Index j : incident[v]) {
        for (const auto& w : members_of(g.hyperedges()[j])) {
          Eigen::Index wi = g.vertex_index(w);
          if (label[wi] < 0) {
            label[wi] = comp;
            queue.push_back(wi);
          }
        }
      }
    }
  }

  std::vector<Component> components(next);
  for (Eigen::Index i = 0; i < n; ++i)
    components[label[i]].vertices.push_back(g.vertices()[i]);
  for (const auto& h : g.hyperedges()) {
    auto vs = members_of(h);
    if (vs.empty()) continue;  // degenerate relaxed hyperedge
    components[label[g.vertex_index(vs.front())]].hyperedges.push_back(h.id);
  }
  return components;
}

namespace {

struct SignConstraint {
  Eigen::Index other;
  int parity;  // 0 = same block, 1 = opposite block
  Eigen::Index hyperedge;
};

struct ParityDsu {
  std::vector<Eigen::Index> parent;
  std::vector<int> parity;  // relative to parent chain

  explicit ParityDsu(Eigen::Index n) : parent(n), parity(n, 0) {
    for (Eigen::Index i = 0; i < n; ++i) parent[i] = i;
  }

  std::pair<Eigen::Index, int> find(Eigen::Index x) {
    if (parent[x] == x) return {x, 0};
    auto [root, p] = find(parent[x]);
    parent[x] = root;
    parity[x] ^= p;
    return {root, parity[x]};
  }

  // Returns false on a parity contradiction.
  bool unite(Eigen::Index a, Eigen::Index b, int p) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == p;
    parent[ra] = rb;
    parity[ra] = pa ^ pb ^ p;
    return true;
  }
};

/// Shortest constraint chain deriving both signs for a vertex: BFS path
/// between the two endpoints of the contradicting constraint, plus the
/// constraint's own hyperedge.
std::vector<std::string> conflict_chain(const ChemicalHypergraph& g,
                                        const std::vector<std::vector<SignConstraint>>& adj,
                                        Eigen::Index from, Eigen::Index to,
                                        Eigen::Index closing_edge) {
  std::vector<Eigen::Index> parent(g.vertex_count(), -1), via(g.vertex_count(), -1);
  std::deque<Eigen::Index> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    Eigen::Index v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (const auto& c : adj[v]) {
      if (parent[c.other] < 0) {
        parent[c.other] = v;
        via[c.other] = c.hyperedge;
        queue.push_back(c.other);
      }
    }
  }
  std::vector<std::string> chain;
  auto push_unique = [&](Eigen::Index j) {
    const std::string& id = g.hyperedges()[j].id;
    if (std::find(chain.begin(), chain.end(), id) == chain.end()) chain.push_back(id);
  };
  for (Eigen::Index v = to; v != from; v = parent[v]) push_unique(via[v]);
  std::reverse(chain.begin(), chain.end());
  push_unique(closing_edge);
  return chain;
}

}  // namespace

BipartitenessResult bipartition(const ChemicalHypergraph& g) {
  const Eigen::Index n = g.vertex_count();
  ParityDsu dsu(n);
  std::vector<std::vector<SignConstraint>> adj(n);

  // The adjacency mirrors only the accepted constraints, so a conflict
  // chain never shortcuts through the contradicting constraint itself.
  auto add = [&](Eigen::Index a, Eigen::Index b, int p, Eigen::Index j) {
    if (!dsu.unite(a, b, p)) return false;
    adj[a].push_back({b, p, j});
    adj[b].push_back({a, p, j});
    return true;
  };

  for (Eigen::Index j = 0; j < g.hyperedge_count(); ++j) {
    const Hyperedge& h = g.hyperedges()[j];
    for (const auto& c : h.catalysts())
      return BipartitionConflict{c, {h.id}};
    if (h.inputs.empty() || h.outputs.empty()) continue;
    Eigen::Index anchor = g.vertex_index(h.inputs.front());
    for (const auto& v : h.inputs) {
      Eigen::Index vi = g.vertex_index(v);
      if (vi != anchor && !add(anchor, vi, 0, j))
        return BipartitionConflict{v, conflict_chain(g, adj, anchor, vi, j)};
    }
    for (const auto& v : h.outputs) {
      Eigen::Index vi = g.vertex_index(v);
      if (!add(anchor, vi, 1, j))
        return BipartitionConflict{v, conflict_chain(g, adj, anchor, vi, j)};
    }
  }

  // Deterministic block assignment: the lexicographically least vertex of
  // each component goes to V1.
  std::vector<int> color(n, -1);
  std::map<Eigen::Index, std::string> least_of_root;
  for (Eigen::Index i = 0; i < n; ++i) {
    auto [root, p] = dsu.find(i);
    auto it = least_of_root.find(root);
    if (it == least_of_root.end() || g.vertices()[i] < it->second)
      least_of_root[root] = g.vertices()[i];
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    auto [root, p] = dsu.find(i);
    auto [lroot, lp] = dsu.find(g.vertex_index(least_of_root.at(root)));
    color[i] = p ^ lp;  // 0 exactly for the class containing the least vertex
  }

  Bipartition result;
  for (Eigen::Index i = 0; i < n; ++i)
    (color[i] == 0 ? result.first : result.second).push_back(g.vertices()[i]);
  return result;
}

ChemicalHypergraph flip_vertex(const ChemicalHypergraph& g, const std::string& v) {
  g.vertex_index(v);  // throws unknown_vertex
  HypergraphDocument doc = g.to_document();
  for (auto& h : doc.hyperedges) {
    auto in = std::find(h.inputs.begin(), h.inputs.end(), v);
    auto out = std::find(h.outputs.begin(), h.outputs.end(), v);
    if (in != h.inputs.end() && out != h.outputs.end()) continue;  // catalyst, fixed point
    if (in != h.inputs.end()) {
      h.inputs.erase(in);
      h.outputs.push_back(v);
    } else if (out != h.outputs.end()) {
      h.outputs.erase(out);
      h.inputs.push_back(v);
    }
  }
  return ChemicalHypergraph::validate_relaxed(doc);
}

Rational h_prime(const ChemicalHypergraph& g) {
  if (g.hyperedge_count() == 0)
    throw Error(errc::no_hyperedges, "h' is undefined without hyperedges");
  Rational num = 0, den = 0;
  for (const auto& h : g.hyperedges()) {
    Rational size(static_cast<long long>(h.size()));
    num += size * size;
    den += size;
  }
  return num / den;
}

}  // namespace hyperlap
