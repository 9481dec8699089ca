#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "polyhedra/catalog.hpp"
#include "polyhedra/cyclic.hpp"
#include "polyhedra/error.hpp"
#include "polyhedra/periodic.hpp"

using namespace polyhedra;

namespace {

std::vector<GraphSet> pair_of(std::vector<BipartiteGraph> a, std::vector<BipartiteGraph> b) {
  return {GraphSet(std::move(a)), GraphSet(std::move(b))};
}

oracle::IntWord as_ints(std::span<const SignedLetter> w) {
  std::map<Label, int> id;
  oracle::IntWord out;
  for (const auto& l : w) {
    auto it = id.emplace(l.base, static_cast<int>(id.size()) + 1).first;
    out.push_back(l.sign * it->second);
  }
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Parse;
}

bool is_cycle(const Multigraph& g, std::size_t length) {
  if (g.vertex_count() != length || g.edge_count() != length || !is_connected(g)) return false;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

/// The rectangle's squares must be faces of the presentation and fit together
/// as two rows glued along the x-line.
void check_strip_geometry(const PolygonalPresentation& p, const RectangleRelator& r) {
  const std::size_t s = r.s();
  REQUIRE(r.squares.size() == 2 * s);
  for (const auto& sq : r.squares) CHECK(p.tuples().count(canonical_rotation(std::span<const Label>(sq))));
  for (std::size_t i = 0; i < s; ++i) {
    const auto& top = r.squares[i];
    const auto& bottom = r.squares[s + i];
    CHECK(top[0] == r.U[i].base);
    CHECK(bottom[0] == r.U[i].base);
    CHECK(top[2] == bottom[2]);
    CHECK(top[2] == r.W[i].base);
    CHECK(top[1] != bottom[1]);
    for (const auto* row : {&top, &bottom}) {
      const auto& next = r.squares[(row == &top ? 0 : s) + (i + 1) % s];
      // x-edges alternate direction: even slots meet the next square at a
      // v-edge, odd slots at a y-edge.
      if (i % 2 == 0) {
        CHECK((*row)[3] == next[3]);
      } else {
        CHECK((*row)[1] == next[1]);
      }
    }
  }
  CHECK(r.squares[s - 1][1] == r.y1);
  CHECK(r.squares[2 * s - 1][1] == r.y2);
}

}  // namespace

TEST_SUITE("periodic") {
  TEST_CASE("angles as multiples of pi") {
    CHECK(PiMultiple(2, 4) == PiMultiple(1, 2));
    CHECK((PiMultiple(1, 2) + PiMultiple(1, 3)).str() == "5pi/6");
    CHECK((4 * PiMultiple(1, 2)).str() == "2pi");
    CHECK(PiMultiple(1, -3).str() == "-pi/3");
    CHECK(PiMultiple(0, 5).str() == "0");
    CHECK_THROWS_AS(PiMultiple(1, 0), Error);
  }

  TEST_CASE("uniform angle sums on a word") {
    auto torus = CyclicWord::parse("a b a' b'");
    auto ok = angle_sum_certificate(torus, PiMultiple(1, 2));
    CHECK(ok.ok);
    REQUIRE(ok.vertices.size() == 1);
    CHECK(ok.vertices[0].corners == 4);
    CHECK_FALSE(angle_sum_certificate(torus, PiMultiple(1, 3)).ok);
    CHECK(code_of([] { angle_sum_certificate(CyclicWord::parse("a b"), PiMultiple(1, 2)); }) == ErrorCode::NotQuadratic);
    CHECK(code_of([&] { angle_sum_certificate(torus, PiMultiple(0)); }) == ErrorCode::BadParameter);
    // Hexagon torus: two vertices with three corners each.
    CHECK(angle_sum_certificate(CyclicWord::parse("a b c a' b' c'"), PiMultiple(2, 3)).ok);
  }

  TEST_CASE("shape analysis of P2 presentations") {
    auto k22 = catalog::complete_bipartite(2, 2);
    auto p = construct_theorem1(pair_of({k22}, {k22}));
    auto shape = analyze_p2_shape(p);
    CHECK(shape.x_letters == std::vector<Label>{Label("x1", 1), Label("x2", 1)});
    CHECK(shape.y_letters == std::vector<Label>{Label("y1", 1), Label("y2", 1)});
    CHECK(shape.x_to_u.at(Label("x2", 1)) == Label("x2", 2));
    CHECK(pigeonhole_bound(p) == 16);

    PolygonalPresentation triangles({}, {}, 3);
    std::vector<Label> t{Label("a"), Label("b"), Label("c")};
    triangles.add_tuple(t);
    CHECK(code_of([&] { analyze_p2_shape(triangles); }) == ErrorCode::NotP2Shape);

    PolygonalPresentation clash({}, {}, 4);
    std::vector<Label> t1{Label("a"), Label("b"), Label("c"), Label("d")};
    std::vector<Label> t2{Label("a"), Label("c"), Label("b"), Label("d")};
    clash.add_tuple(t1);
    clash.add_tuple(t2);
    CHECK(code_of([&] { analyze_p2_shape(clash); }) == ErrorCode::NotP2Shape);
  }

  TEST_CASE("rectangle relator for two copies of K2,2") {
    auto k22 = catalog::complete_bipartite(2, 2);
    auto p = construct_theorem1(pair_of({k22}, {k22}));
    auto start = find_start_state(p);
    REQUIRE(start.has_value());
    auto r = find_rectangle(p, *start);
    CHECK(r.s() == 2);
    CHECK(format_word(r.U) == "x2^1' x1^1");
    CHECK(format_word(r.W) == "x2^2 x1^2'");
    CHECK(r.boundary == CyclicWord::parse("y2^1' y1^1 x1^2 x2^2' y1^1' y2^1 x2^2 x1^2'"));
    CHECK(r.boundary_quadratic());
    CHECK(r.commutator_shape());
    CHECK(r.steps <= pigeonhole_bound(p));
    check_strip_geometry(p, r);
    CHECK(angle_sum_certificate(rectangle_tessellation(r), PiMultiple(1, 2)).ok);
    // The boundary alone glues to a torus with s + 1 vertices and 2s + 4
    // corners, so a uniform right angle cannot close up.
    auto literal = angle_sum_certificate(r.boundary, PiMultiple(1, 2));
    CHECK_FALSE(literal.ok);
    CHECK(literal.vertices.size() == r.s() + 1);
  }

  TEST_CASE("links of girth above four admit no strip") {
    for (auto g : {catalog::even_cycle(3), catalog::heawood()}) {
      auto p = construct_theorem1(pair_of({g}, {g}));
      CHECK_FALSE(find_start_state(p).has_value());
    }
  }

  TEST_CASE("invalid start states cannot be extended") {
    auto k22 = catalog::complete_bipartite(2, 2);
    auto p = construct_theorem1(pair_of({k22}, {k22}));
    StripState bad;
    bad.entering = {Label("x1", 1), Label("x1", 1)};
    bad.leaving = {Label("y1", 1), Label("y2", 1)};
    CHECK(code_of([&] { find_rectangle(p, bad); }) == ErrorCode::NoExtension);

    PolygonalPresentation single({}, {}, 4);
    std::vector<Label> t{Label("x1"), Label("y1"), Label("u1"), Label("v1")};
    single.add_tuple(t);
    CHECK_FALSE(find_start_state(single).has_value());
  }

  TEST_CASE("strip walks on random P2 instances") {
    std::mt19937_64 rng(77);
    int found = 0;
    for (int trial = 0; trial < 40; ++trial) {
      auto inst = gen::compatible_sets(rng, 2);
      CAPTURE(inst.description);
      auto p = construct_theorem1(inst.sets);
      auto start = find_start_state(p);
      if (!start) continue;
      try {
        auto r = find_rectangle(p, *start);
        ++found;
        CHECK(r.steps <= pigeonhole_bound(p));
        CHECK(r.s() % 2 == 0);
        CHECK(r.commutator_shape());
        check_strip_geometry(p, r);
        CHECK(angle_sum_certificate(rectangle_tessellation(r), PiMultiple(1, 2)).ok);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoExtension);
      }
    }
    CHECK(found > 0);
  }

  TEST_CASE("square sets always close with distinct letters") {
    for (std::size_t q = 2; q <= 4; ++q) {
      auto g = catalog::complete_bipartite(q, q);
      auto p = construct_theorem1(pair_of({g}, {g}));
      auto r = find_rectangle(p, *find_start_state(p));
      CHECK(r.boundary_quadratic());
      CHECK(r.commutator_shape());
    }
  }

  TEST_CASE("region of four right-angled 2k-gons") {
    for (std::size_t k = 3; k <= 8; ++k) {
      CAPTURE(k);
      auto t = theorem3_word(k);
      CHECK(t.boundary.size() == 8 * k - 8);
      CHECK(t.U.length() == 2 * (4 * k - 6));
      CHECK(is_non_cancelling(t.substitution, t.U.word()).ok);
      CHECK(apply(t.substitution, t.U.word()) == t.W);
      // The surface is fixed by W; the permutation oracle counts its vertices.
      auto ints = as_ints(t.boundary);
      CHECK(oracle::glued_vertices(ints) == 2 * k - 1);
      CHECK(t.U.genus() == oracle::genus(ints));
      CHECK(t.U.genus() == k - 1);
      CHECK(euler_data(t.U.word()).vertices == 2 * k - 3);
      CHECK(within_length_bounds(t.U.genus(), t.U.length()));
      CHECK(angle_sum_certificate(std::span<const SignedLetter>(t.boundary), t.corner_angles).ok);

      auto region = Polyhedron::from_faces(t.polygons);
      auto center = region.vertex_of_end(end_id(region.edge_index(Label("xi", 1)), End::Head));
      CHECK(is_cycle(link_at(region, center).multigraph(), 4));
    }
    auto three = theorem3_word(3);
    CHECK(three.U.genus() == 2);
    CHECK(euler_data(three.U.word()).vertices == 3);
    CHECK(code_of([] { theorem3_word(2); }) == ErrorCode::BadParameter);
  }

  TEST_CASE("region of 2m squares around one vertex") {
    for (std::size_t m : {3u, 4u, 6u, 8u}) {
      CAPTURE(m);
      auto t = theorem4_word(m);
      CHECK(t.W.length() == 4 * m);
      CHECK(t.W.genus() == m - 1);
      CHECK(oracle::genus(as_ints(t.boundary)) == m - 1);
      CHECK(t.W.length() == 4 * t.W.genus() + 4);
      CHECK(t.region.size() == 2 * m);
      auto region = Polyhedron::from_faces(t.region);
      auto center = region.vertex_of_end(end_id(region.edge_index(Label("c", 1)), End::Head));
      CHECK(is_cycle(link_at(region, center).multigraph(), 2 * m));
      CHECK(angle_sum_certificate(std::span<const SignedLetter>(t.boundary), t.corner_angles).ok);
    }
    CHECK(code_of([] { theorem4_word(5); }) == ErrorCode::BadParameter);
    CHECK(code_of([] { theorem4_boundary(1); }) == ErrorCode::BadParameter);
    CHECK_FALSE(is_wicks_form(CyclicWord(theorem4_boundary(2))).valid);
    CHECK(genus(CyclicWord(theorem4_boundary(5))) == 4);
  }
}
