#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "polyhedra/cyclic.hpp"
#include "polyhedra/error.hpp"
#include "polyhedra/label.hpp"
#include "polyhedra/word.hpp"

using namespace polyhedra;

TEST_SUITE("word") {
  TEST_CASE("labels parse with and without family index") {
    auto a = parse_label("x3^2");
    CHECK(a.base == "x3");
    CHECK(a.family == 2);
    CHECK(a.str() == "x3^2");
    auto b = parse_label("y_1");
    CHECK_FALSE(b.family.has_value());
    CHECK(b.str() == "y_1");
    CHECK_THROWS_AS(parse_label("x^"), Error);
    CHECK_THROWS_AS(parse_label("x^-1"), Error);
    CHECK_THROWS_AS(parse_label("a-b"), Error);
    CHECK_THROWS_AS(parse_label(""), Error);
  }

  TEST_CASE("labels order by family first") {
    CHECK(Label("z") < Label("a", 1));
    CHECK(Label("b", 1) < Label("a", 2));
    CHECK(Label("a", 2) < Label("b", 2));
  }

  TEST_CASE("words parse and print") {
    auto w = parse_word("a b a' b'");
    REQUIRE(w.size() == 4);
    CHECK(w[2].sign == -1);
    CHECK(format_word(w) == "a b a' b'");
    CHECK(format_word(inverse_word(w)) == "b a b' a'");
    CHECK(format_word(parse_word("x^2' y^1")) == "x^2' y^1");
    CHECK_THROWS_AS(parse_word("a''"), Error);
    CHECK_THROWS_AS(parse_word("   "), Error);
    CHECK_THROWS_AS(parse_word("a '"), Error);
  }

  TEST_CASE("quadratic predicates") {
    CHECK(is_quadratic(parse_word("a b a b")));
    CHECK_FALSE(is_orientable_quadratic(parse_word("a b a b")));
    CHECK(is_orientable_quadratic(parse_word("a b a' b'")));
    CHECK_FALSE(is_quadratic(parse_word("a b a")));
  }

  TEST_CASE("cyclic words compare up to rotation") {
    CHECK(CyclicWord::parse("b a' b' a") == CyclicWord::parse("a b a' b'"));
    CHECK(CyclicWord::parse("a b a' b'").str() == "a b a' b'");
    CHECK_FALSE(CyclicWord::parse("a b") == CyclicWord::parse("a b'"));
    CHECK(CyclicWord::parse("a b")[3] == SignedLetter(Label("b")));
    CHECK_THROWS_AS(CyclicWord(LinearWord{}), Error);
  }

  TEST_CASE("least rotation matches brute force on random sequences") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
      std::size_t n = 1 + rng() % 12;
      std::vector<int> s(n);
      for (auto& v : s) v = static_cast<int>(rng() % 3);
      std::size_t r = least_rotation(std::span<const int>(s));
      CHECK(rotate_to(std::span<const int>(s), r) == oracle::least_rotation(s));
      auto period = rotation_period(std::span<const int>(s));
      CHECK(n % period == 0);
      auto shifted = rotate_to(std::span<const int>(s), period % n);
      CHECK(shifted == s);
    }
  }

  TEST_CASE("cyclic word canonical form is rotation invariant") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      auto w = gen::random_word(rng, 1 + rng() % 10, 3);
      CyclicWord c(w);
      std::size_t r = rng() % w.size();
      LinearWord rot(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
      CHECK(CyclicWord(rot) == c);
      CHECK(c.inverse().inverse() == c);
    }
  }
}
