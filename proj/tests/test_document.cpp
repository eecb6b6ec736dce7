#include <doctest.h>

#include "hyperlap/builtin.hpp"
#include "hyperlap/document.hpp"
#include "hyperlap/hypergraph.hpp"
#include "hyperlap/structure.hpp"
#include "hyperlap/types.hpp"

using namespace hyperlap;

TEST_CASE("serialize/parse round-trips documents and bytes") {
  auto doc = builtin::two_reaction_chain();
  std::string text = serialize(doc);
  CHECK(parse_document(text) == doc);
  CHECK(serialize(parse_document(text)) == text);
  CHECK(text.back() == '\n');
}

TEST_CASE("parse diagnoses malformed input") {
  CHECK_THROWS_AS(parse_document("{not json"), Error);
  CHECK_THROWS_AS(parse_document("[]"), Error);
  CHECK_THROWS_AS(parse_document(R"({"vertices": ["a"]})"), Error);
  CHECK_THROWS_AS(parse_document(R"({"vertices": "a", "hyperedges": []})"), Error);
  CHECK_THROWS_AS(
      parse_document(R"({"vertices": ["a"], "hyperedges": [{"inputs": [], "outputs": []}]})"),
      Error);
  CHECK_THROWS_AS(parse_document(R"({"vertices": [1], "hyperedges": []})"), Error);

  try {
    load_document("/nonexistent/path.json");
    FAIL("expected io_error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::io_error);
  }
}

TEST_CASE("family names round-trip") {
  for (Family f : {Family::Generic, Family::Bipartite, Family::Balanced, Family::AllCatalyst,
                   Family::Graph})
    CHECK(family_from_string(to_string(f)) == f);
  CHECK_THROWS_AS(family_from_string("nope"), Error);
}

TEST_CASE("random generation is seed-deterministic") {
  auto a = random_document(7, 5, 42);
  auto b = random_document(7, 5, 42);
  CHECK(a == b);
  CHECK(serialize(a) == serialize(b));
  CHECK(a != random_document(7, 5, 43));
}

TEST_CASE("family constraints hold by construction") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto bip = ChemicalHypergraph::validate(random_document(6, 5, seed, Family::Bipartite));
    CHECK(is_bipartite(bipartition(bip)));

    auto bal = ChemicalHypergraph::validate(random_document(6, 5, seed, Family::Balanced));
    for (const auto& h : bal.hyperedges()) CHECK(h.inputs.size() == h.outputs.size());

    auto cat = ChemicalHypergraph::validate(random_document(6, 5, seed, Family::AllCatalyst));
    for (const auto& h : cat.hyperedges()) {
      CHECK(h.inputs == h.outputs);
      CHECK(h.catalysts().size() == h.size());
    }

    auto gr = ChemicalHypergraph::validate(random_document(6, 5, seed, Family::Graph));
    CHECK(is_graph(gr));
  }
}

TEST_CASE("infeasible family requests are rejected") {
  try {
    random_document(1, 3, 0, Family::Graph);
    FAIL("expected infeasible_family");
  } catch (const Error& e) {
    CHECK(e.code() == errc::infeasible_family);
  }
  CHECK_THROWS_AS(random_document(1, 3, 0, Family::Bipartite), Error);
  CHECK_THROWS_AS(random_document(0, 0, 0), Error);
  // One vertex with no hyperedges is fine for every family.
  CHECK_NOTHROW(random_document(1, 0, 0, Family::Graph));
}
