#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "generators.hpp"
#include "polyhedra/tableau.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = polyhedra::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (fs::path(TEST_DATA_DIR) / name).string(); }

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("polyhedra_cli_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check-graph") {
    auto r = run({"check-graph", data("heawood.tab"), "--m-gon", "3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "generalized 3-gon: yes"));
    CHECK(contains(r.out, "girth: 6"));
    auto no = run({"check-graph", data("k22.tab"), "--m-gon", "3"});
    CHECK(no.code == 1);
    CHECK(contains(no.out, "generalized 3-gon: no (girth 4 != 6)"));
    auto detect = run({"check-graph", data("c14.tab")});
    CHECK(detect.code == 0);
    CHECK(contains(detect.out, "generalized polygon: m = 7"));
    auto missing = run({"check-graph", data("nope.tab")});
    CHECK(missing.code == 2);
    CHECK(contains(missing.err, "cannot read"));
  }

  TEST_CASE("periodic plane words") {
    auto t4 = run({"theorem4", "--m", "4"});
    CHECK(t4.code == 0);
    CHECK(contains(t4.out, "W = a^1 b^1 b^2' a^1'"));
    CHECK(contains(t4.out, "genus = 3"));
    CHECK(contains(t4.out, "central link: 8-cycle"));
    CHECK(run({"theorem4", "--m", "5"}).code == 2);
    auto t3 = run({"theorem3", "--k", "3"});
    CHECK(t3.code == 0);
    CHECK(contains(t3.out, "vertices = 3, edges = 6"));
    CHECK(contains(t3.out, "genus = 2"));
    CHECK(contains(t3.out, "ai^2 -> xs^2' xi^2"));
    CHECK(run({"theorem3", "--k", "2"}).code == 2);
  }

  TEST_CASE("wicks subcommands") {
    auto bad = run({"wicks-check", "a a' b b'"});
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "condition (ii) violated at position 0"));
    CHECK(run({"wicks-check", "a b a' b'"}).code == 0);
    CHECK(run({"wicks-check", "a b''"}).code == 2);
    auto g = run({"wicks-genus", "@" + data("hexagon.word")});
    CHECK(g.code == 0);
    CHECK(contains(g.out, "genus = 1"));
    CHECK(contains(g.out, "vertices = 2, edges = 3"));
    CHECK(run({"wicks-genus", "a a' b b'"}).code == 1);
    auto e = run({"wicks-enum", "--max-length", "6"});
    CHECK(e.code == 0);
    CHECK(e.out == "length 4 genus 1: a b a' b'\nlength 6 genus 1: a b c a' b' c'\n2 forms\n");
    CHECK(run({"wicks-enum", "--max-length", "5"}).code == 2);
  }

  TEST_CASE("build, verify and analyse a square complex") {
    TempDir tmp;
    auto out = tmp.file("p2.txt");
    auto b = run({"build", data("k22.tab"), "--k", "2", "--out", out});
    REQUIRE(b.code == 0);
    CHECK(fs::exists(out + ".graphs.tab"));
    auto v = run({"verify-presentation", out});
    CHECK(v.code == 0);
    CHECK(contains(v.out, "axioms: ok"));
    CHECK(contains(v.out, "tuples: 4 cyclic, 16 linear"));
    auto l = run({"verify-links", out});
    CHECK(l.code == 0);
    CHECK(contains(l.out, "links: ok"));
    auto mn = run({"check-mn", out});
    CHECK(mn.code == 0);
    CHECK(contains(mn.out, "m = 4\nn = 4\n"));
    auto c = run({"build-complex", out});
    CHECK(c.code == 0);
    CHECK(contains(c.out, "face 0: x1^1 y1^1 x1^2 y1^2"));
    auto p = run({"periodic", out});
    CHECK(p.code == 0);
    CHECK(contains(p.out, "s = 2 (bound 16)"));
    CHECK(contains(p.out, "commutator: yes"));
    CHECK(contains(p.out, "tessellation angle sum: ok"));
  }

  TEST_CASE("periodic reports the absence of a strip") {
    TempDir tmp;
    auto out = tmp.file("c6.txt");
    REQUIRE(run({"build", data("c6.tab"), "--k", "2", "--out", out}).code == 0);
    auto p = run({"periodic", out});
    CHECK(p.code == 1);
    CHECK(contains(p.out, "no strip vertex"));
  }

  TEST_CASE("seeded builds are reproducible") {
    auto a = run({"build", data("heawood.tab"), data("c14.tab"), "--seed", "42"});
    auto b = run({"build", data("heawood.tab"), data("c14.tab"), "--seed", "42"});
    CHECK(a.code == 1);  // different degrees
    auto c = run({"build", data("heawood.tab"), "--k", "3", "--seed", "42"});
    auto d = run({"build", data("heawood.tab"), "--k", "3", "--seed", "42"});
    CHECK(c.code == 0);
    CHECK(c.out == d.out);
    CHECK(a.out == b.out);
  }

  TEST_CASE("tableau output lists every link graph") {
    auto t = run({"build", data("k33.tab"), "--k", "3", "--format", "tableau"});
    REQUIRE(t.code == 0);
    CHECK(polyhedra::parse_tableaux(t.out).size() == 6);
  }

  TEST_CASE("build then verify always succeeds") {
    TempDir tmp;
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 8; ++trial) {
      auto inst = gen::compatible_sets(rng, 2 + trial % 2);
      std::vector<std::string> args{"build"};
      for (std::size_t i = 0; i < inst.sets.size(); ++i) {
        auto f = tmp.file("set" + std::to_string(trial) + "_" + std::to_string(i) + ".tab");
        std::ofstream(f) << polyhedra::format_tableaux(inst.sets[i].graphs());
        args.push_back(f);
      }
      auto out = tmp.file("pres" + std::to_string(trial) + ".txt");
      args.insert(args.end(), {"--seed", std::to_string(trial), "--out", out});
      REQUIRE(run(args).code == 0);
      CHECK(run({"verify-presentation", out}).code == 0);
      CHECK(run({"verify-links", out}).code == 0);
    }
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"compat", data("k22.tab"), data("k33.tab")}).code == 1);
    CHECK(run({"compat", data("k22.tab"), data("c6.tab")}).code == 1);
    CHECK(run({"build", data("k22.tab")}).code == 2);
  }
}
