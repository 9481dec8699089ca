#include <doctest.h>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "polyhedra/bigraph.hpp"
#include "polyhedra/catalog.hpp"
#include "polyhedra/error.hpp"

using namespace polyhedra;

namespace {

oracle::EdgeList edge_list(const BipartiteGraph& g) {
  oracle::EdgeList out;
  for (const auto& e : g.edges()) out.emplace_back(e.white, g.white_count() + e.black);
  return out;
}

BipartiteGraph shuffled_copy(const BipartiteGraph& g, std::mt19937_64& rng) {
  std::vector<Label> w = g.whites(), b = g.blacks();
  std::vector<std::pair<Label, Label>> edges;
  for (const auto& e : g.edges()) edges.emplace_back(g.whites()[e.white], g.blacks()[e.black]);
  std::shuffle(w.begin(), w.end(), rng);
  std::shuffle(b.begin(), b.end(), rng);
  std::shuffle(edges.begin(), edges.end(), rng);
  return BipartiteGraph::from_labels(g.name() + "_copy", w, b, edges);
}

}  // namespace

TEST_SUITE("bigraph") {
  TEST_CASE("catalog graphs have the expected shape") {
    auto k33 = catalog::complete_bipartite(3, 3);
    CHECK(k33.edge_count() == 9);
    auto h = catalog::heawood();
    CHECK(h.white_count() == 7);
    CHECK(h.edge_count() == 21);
    for (std::size_t w = 0; w < 7; ++w) CHECK(h.white_degree(w) == 3);
    for (std::size_t b = 0; b < 7; ++b) CHECK(h.black_degree(b) == 3);
    auto c = catalog::even_cycle(5);
    CHECK(c.vertex_count() == 10);
    CHECK(c.edge_count() == 10);
  }

  TEST_CASE("girth and diameter agree with the brute-force oracles") {
    std::vector<BipartiteGraph> graphs = {catalog::complete_bipartite(2, 2), catalog::complete_bipartite(3, 4),
                                          catalog::heawood(), catalog::path(5)};
    for (std::size_t m = 2; m <= 8; ++m) graphs.push_back(catalog::even_cycle(m));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
      graphs.push_back(gen::connected_bigraph(rng, 1 + rng() % 6, 1 + rng() % 6, rng() % 6));
    }
    for (const auto& g : graphs) {
      CAPTURE(g.name());
      auto el = edge_list(g);
      CHECK(girth(g) == oracle::girth(g.vertex_count(), el));
      auto d = oracle::diameter(g.vertex_count(), el);
      REQUIRE(d.has_value());
      CHECK(diameter(g) == *d);
      CHECK(is_connected(g));
    }
  }

  TEST_CASE("parallel edges form 2-cycles") {
    auto g = BipartiteGraph::from_labels("digon", {Label("w")}, {Label("b")}, {{Label("w"), Label("b")}, {Label("w"), Label("b")}});
    CHECK(girth(g) == 2u);
    CHECK(format_girth(girth(catalog::path(3))) == "infinite");
  }

  TEST_CASE("generalized polygons are recognised") {
    for (std::size_t q = 2; q <= 4; ++q) CHECK(is_generalized_m_gon(catalog::complete_bipartite(q, q), 2).ok);
    CHECK(is_generalized_m_gon(catalog::heawood(), 3).ok);
    CHECK_FALSE(is_generalized_m_gon(catalog::heawood(), 4).ok);
    for (std::size_t m = 2; m <= 8; ++m) {
      CHECK(is_generalized_m_gon(catalog::even_cycle(m), m).ok);
      CHECK_FALSE(is_generalized_m_gon(catalog::even_cycle(m), m + 1).ok);
    }
    CHECK(is_generalized_m_gon(catalog::complete_bipartite(2, 3), 2).ok);
    CHECK_FALSE(is_generalized_m_gon(catalog::complete_bipartite(2, 3), 3).ok);
  }

  TEST_CASE("a pendant edge is reported as a degree failure") {
    auto c = catalog::even_cycle(3);
    std::vector<Label> whites = c.whites(), blacks = c.blacks();
    blacks.emplace_back("tail");
    std::vector<std::pair<Label, Label>> edges;
    for (const auto& e : c.edges()) edges.emplace_back(c.whites()[e.white], c.blacks()[e.black]);
    edges.emplace_back(whites[0], Label("tail"));
    auto g = BipartiteGraph::from_labels("pendant", whites, blacks, edges);
    auto v = is_generalized_m_gon(g, 3);
    CHECK_FALSE(v.ok);
    CHECK(v.diagnostic.find("min degree < 2") != std::string::npos);
  }

  TEST_CASE("disconnected graphs") {
    auto g = BipartiteGraph::from_labels("two", {Label("a"), Label("b")}, {Label("x"), Label("y")},
                                         {{Label("a"), Label("x")}, {Label("b"), Label("y")}});
    CHECK_FALSE(is_connected(g));
    CHECK(is_generalized_m_gon(g, 2).diagnostic == "not connected");
    try {
      (void)diameter(g);
      FAIL("expected DisconnectedGraph");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DisconnectedGraph);
    }
  }

  TEST_CASE("malformed graphs are rejected") {
    CHECK_THROWS_AS(BipartiteGraph::from_labels("dup", {Label("a"), Label("a")}, {Label("x")}, {}), Error);
    CHECK_THROWS_AS(BipartiteGraph::from_labels("overlap", {Label("a")}, {Label("a")}, {}), Error);
    CHECK_THROWS_AS(BipartiteGraph::from_labels("edge", {Label("a")}, {Label("x")}, {{Label("a"), Label("z")}}), Error);
    CHECK_THROWS_AS(GraphSet({catalog::heawood(), catalog::heawood()}), Error);
  }

  TEST_CASE("isomorphism finds a valid witness for relabelled copies") {
    std::mt19937_64 rng(17);
    std::vector<BipartiteGraph> graphs = {catalog::heawood(), catalog::complete_bipartite(3, 3), catalog::even_cycle(6)};
    for (int i = 0; i < 30; ++i) graphs.push_back(gen::connected_bigraph(rng, 2 + rng() % 5, 2 + rng() % 5, rng() % 5));
    for (const auto& g : graphs) {
      auto h = shuffled_copy(g, rng);
      auto iso = are_isomorphic(g, h, true);
      REQUIRE(iso.has_value());
      // Witness preserves colours and edge multiplicities.
      std::vector<std::pair<std::size_t, std::size_t>> image;
      for (const auto& e : g.edges()) {
        std::size_t a = (*iso)[e.white], b = (*iso)[g.white_count() + e.black];
        REQUIRE(h.is_white(a));
        REQUIRE_FALSE(h.is_white(b));
        image.emplace_back(a, b - h.white_count());
      }
      std::vector<std::pair<std::size_t, std::size_t>> target;
      for (const auto& e : h.edges()) target.emplace_back(e.white, e.black);
      std::sort(image.begin(), image.end());
      std::sort(target.begin(), target.end());
      CHECK(image == target);
    }
  }

  TEST_CASE("colour-respecting isomorphism distinguishes a graph from its dual") {
    auto k23 = catalog::complete_bipartite(2, 3);
    CHECK_FALSE(are_isomorphic(k23, dual(k23), true).has_value());
    CHECK(are_isomorphic(k23, dual(k23), false).has_value());
    CHECK(are_isomorphic(catalog::heawood(), dual(catalog::heawood()), true).has_value());
    CHECK_FALSE(are_isomorphic(catalog::even_cycle(3), catalog::even_cycle(4), false).has_value());
    CHECK(dual(dual(k23)) == k23);
  }

  TEST_CASE("compatibility compares white degree multisets") {
    GraphSet a({catalog::complete_bipartite(2, 2), catalog::even_cycle(3)});
    GraphSet b({catalog::even_cycle(5)});
    GraphSet c({catalog::complete_bipartite(2, 3), catalog::even_cycle(3)});
    std::vector<GraphSet> ok{a, b};
    auto r = are_compatible(ok);
    CHECK(r.compatible);
    REQUIRE(r.aligned.size() == 2);
    CHECK(r.aligned[0].size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
      auto d0 = a.graphs()[r.aligned[0][i].graph].white_degree(r.aligned[0][i].white);
      auto d1 = b.graphs()[r.aligned[1][i].graph].white_degree(r.aligned[1][i].white);
      CHECK(d0 == d1);
    }
    std::vector<GraphSet> bad{a, c};
    auto r2 = are_compatible(bad);
    CHECK_FALSE(r2.compatible);
    CHECK(r2.reason.find("differ") != std::string::npos);
    std::vector<GraphSet> count{a, GraphSet({catalog::even_cycle(4)})};
    CHECK_FALSE(are_compatible(count).compatible);
  }

  TEST_CASE("seeded alignment is reproducible and degree preserving") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
      auto inst = gen::compatible_sets(rng, 3);
      auto seed = rng();
      auto r1 = are_compatible(inst.sets, seed);
      auto r2 = are_compatible(inst.sets, seed);
      REQUIRE(r1.compatible);
      CHECK(r1.aligned == r2.aligned);
      for (std::size_t j = 1; j < inst.sets.size(); ++j) {
        for (std::size_t i = 0; i < r1.aligned[0].size(); ++i) {
          auto& s0 = inst.sets[0].graphs()[r1.aligned[0][i].graph];
          auto& sj = inst.sets[j].graphs()[r1.aligned[j][i].graph];
          CHECK(s0.white_degree(r1.aligned[0][i].white) == sj.white_degree(r1.aligned[j][i].white));
        }
      }
    }
  }
}
