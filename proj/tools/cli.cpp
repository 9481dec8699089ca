#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <vector>

#include "polyhedra/bigraph.hpp"
#include "polyhedra/complex.hpp"
#include "polyhedra/error.hpp"
#include "polyhedra/periodic.hpp"
#include "polyhedra/presentation.hpp"
#include "polyhedra/presentation_io.hpp"
#include "polyhedra/tableau.hpp"
#include "polyhedra/wicks.hpp"
#include "polyhedra/word.hpp"

namespace polyhedra::cli {

namespace {

namespace fs = std::filesystem;

/// Errors that mean the input itself is unusable; everything else is a
/// failed verification.
bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse:
    case ErrorCode::InvalidGraph:
    case ErrorCode::UnknownLabel:
    case ErrorCode::NotQuadratic:
    case ErrorCode::UnknownVertex:
    case ErrorCode::BadParameter:
      return true;
    default:
      return false;
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string word_argument(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return read_text_file(arg.substr(1));
  return arg;
}

std::vector<GraphSet> load_sets(const std::vector<std::string>& files, std::optional<std::size_t> replicate) {
  std::vector<GraphSet> sets;
  for (const auto& f : files) sets.emplace_back(load_tableau_file(f));
  if (replicate) {
    if (sets.size() != 1) throw Error(ErrorCode::BadParameter, "--k replicates exactly one set file");
    if (*replicate < 2) throw Error(ErrorCode::BadParameter, "--k must be at least 2");
    sets.assign(*replicate, sets.front());
  }
  if (sets.size() < 2) throw Error(ErrorCode::BadParameter, "at least two graph sets are needed");
  return sets;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorCode::BadParameter, "cannot write " + path.string());
  os << text;
}

std::string format_girth_value(const Girth& g) { return format_girth(g); }

// ---------------------------------------------------------------------------

int check_graph(const std::string& file, std::optional<std::size_t> m, std::ostream& out) {
  auto graphs = load_tableau_file(file);
  bool all_ok = true;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    if (i) out << "\n";
    out << "graph " << g.name() << "\n";
    out << "whites " << g.white_count() << ", blacks " << g.black_count() << ", edges " << g.edges().size() << "\n";
    bool connected = is_connected(g);
    out << "connected: " << yes_no(connected) << "\n";
    auto gi = girth(g);
    out << "girth: " << format_girth_value(gi) << "\n";
    out << "diameter: " << (connected ? std::to_string(diameter(g)) : std::string("infinite")) << "\n";
    if (m) {
      auto v = is_generalized_m_gon(g, *m);
      out << "generalized " << *m << "-gon: " << (v.ok ? "yes" : "no (" + v.diagnostic + ")") << "\n";
      all_ok = all_ok && v.ok;
    } else if (gi && *gi % 2 == 0 && is_generalized_m_gon(g, *gi / 2).ok) {
      out << "generalized polygon: m = " << *gi / 2 << "\n";
    } else {
      out << "generalized polygon: no\n";
    }
  }
  return all_ok ? 0 : 1;
}

int compat(const std::vector<std::string>& files, std::optional<std::uint64_t> seed, std::ostream& out) {
  auto sets = load_sets(files, std::nullopt);
  auto c = are_compatible(sets, seed);
  if (!c.compatible) {
    out << "compatible: no (" << c.reason << ")\n";
    return 1;
  }
  out << "compatible: yes\n";
  for (std::size_t row = 0; row < c.aligned.front().size(); ++row) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      const auto& ref = c.aligned[j][row];
      const auto& g = sets[j].graphs()[ref.graph];
      out << (j ? "  " : "") << g.whites()[ref.white] << " (" << g.name() << ")";
    }
    out << "\n";
  }
  return 0;
}

int build(const std::vector<std::string>& files, std::optional<std::size_t> k, std::optional<std::uint64_t> seed,
          const std::string& out_file, const std::string& format, std::ostream& out) {
  auto sets = load_sets(files, k);
  auto p = construct_theorem1(sets, seed);
  std::string text;
  if (format == "tableau") {
    text = format_tableaux(p.graphs());
    if (out_file.empty()) {
      out << text;
    } else {
      write_file(out_file, text);
      out << "wrote " << out_file << "\n";
    }
    return 0;
  }
  if (out_file.empty()) {
    out << format_presentation(p);
    return 0;
  }
  fs::path target(out_file);
  std::string graphs_name = target.filename().string() + ".graphs.tab";
  fs::path graphs_path = target.parent_path() / graphs_name;
  write_file(graphs_path, format_tableaux(p.graphs()));
  PresentationFile f{p, {graphs_name}, p.graphs().size()};
  write_file(target, format_presentation(f));
  out << "wrote " << target.string() << "\n";
  out << "wrote " << graphs_path.string() << "\n";
  return 0;
}

int verify_presentation(const std::string& file, std::ostream& out) {
  auto f = load_presentation(file);
  const auto& p = f.presentation;
  auto counts = tuple_count(p);
  out << "graphs: " << p.graphs().size() << "\n";
  out << "tuples: " << counts.cyclic_classes << " cyclic, " << counts.linear_tuples << " linear\n";
  auto report = verify_axioms(p);
  if (report.ok()) {
    out << "axioms: ok\n";
    return 0;
  }
  for (const auto& v : report.violations) out << "violation " << to_string(v.axiom) << ": " << v.detail << "\n";
  out << "axioms: failed\n";
  return 1;
}

Polyhedron complex_from(const std::string& file, const std::string& word) {
  if (!word.empty()) return build_from_word(parse_word(word_argument(word)));
  if (file.empty()) throw Error(ErrorCode::BadParameter, "a presentation file or --word is required");
  return build_from_presentation(load_presentation(file).presentation);
}

int build_complex(const std::string& file, const std::string& word, std::ostream& out) {
  auto K = complex_from(file, word);
  out << format_complex(K);
  return 0;
}

int verify_links_cmd(const std::string& file, std::ostream& out) {
  auto p = load_presentation(file).presentation;
  auto K = build_from_presentation(p);
  auto match = verify_links(K, p.graphs());
  if (!match.ok) {
    out << "links: failed (" << match.diagnostic << ")\n";
    return 1;
  }
  for (std::size_t v = 0; v < match.assignment.size(); ++v) {
    out << "v" << v << " ~ " << p.graphs()[match.assignment[v]].name() << "\n";
  }
  out << "links: ok\n";
  return 0;
}

int check_mn_cmd(const std::string& file, const std::string& word, std::ostream& out) {
  auto K = complex_from(file, word);
  auto c = check_mn(K);
  out << "m = " << format_girth_value(c.m) << "\n";
  out << "n = " << c.n << "\n";
  out << "mn >= 2(m + n): " << yes_no(c.satisfies) << "\n";
  return c.satisfies ? 0 : 1;
}

int wicks_check(const std::string& word, std::ostream& out) {
  auto w = CyclicWord::parse(word_argument(word));
  auto v = is_wicks_form(w);
  out << w.str() << "\n" << v.message << "\n";
  return v.valid ? 0 : 1;
}

int wicks_genus(const std::string& word, std::ostream& out) {
  auto w = CyclicWord::parse(word_argument(word));
  auto d = euler_data(w);
  out << w.str() << "\n";
  out << "vertices = " << d.vertices << ", edges = " << d.edges << "\n";
  out << "genus = " << d.genus << "\n";
  return 0;
}

int wicks_enum(std::size_t max_length, std::ostream& out) {
  auto forms = enumerate_wicks(max_length);
  for (const auto& f : forms) {
    out << "length " << f.length() << " genus " << f.genus() << ": " << f.word().str() << "\n";
  }
  out << forms.size() << " forms\n";
  return 0;
}

void print_angles(const AngleVerdict& v, std::ostream& out) {
  for (const auto& va : v.vertices) {
    out << "  v" << va.vertex << ": " << va.corners << " corners, " << va.total.str() << "\n";
  }
  out << "angle sum: " << (v.ok ? "ok" : "failed (" + v.diagnostic + ")") << "\n";
}

int theorem3(std::size_t k, std::ostream& out) {
  auto t = theorem3_word(k);
  auto d = euler_data(t.U.word());
  out << "W = " << format_word(t.boundary) << "\n";
  out << "U = " << t.U.word().str() << "\n";
  out << "substitution\n";
  for (const auto& [from, to] : t.substitution.mapping()) out << "  " << from << " -> " << format_word(to) << "\n";
  bool nc = is_non_cancelling(t.substitution, t.U.word()).ok;
  out << "non-cancelling: " << yes_no(nc) << "\n";
  bool maps = nc && apply(t.substitution, t.U.word()) == t.W;
  out << "U maps to W: " << yes_no(maps) << "\n";
  out << "vertices = " << d.vertices << ", edges = " << d.edges << "\n";
  out << "genus = " << d.genus << "\n";
  auto angles = angle_sum_certificate(std::span<const SignedLetter>(t.boundary), t.corner_angles);
  print_angles(angles, out);
  return nc && maps && angles.ok ? 0 : 1;
}

int theorem4(std::size_t m, std::ostream& out) {
  auto t = theorem4_word(m);
  auto d = euler_data(t.W.word());
  out << "W = " << format_word(t.boundary) << "\n";
  out << "vertices = " << d.vertices << ", edges = " << d.edges << "\n";
  out << "genus = " << d.genus << "\n";
  auto region = Polyhedron::from_faces(t.region);
  auto center = region.vertex_of_end(end_id(region.edge_index(Label("c", 1)), End::Head));
  auto link = link_at(region, center).multigraph();
  bool cycle = is_connected(link) && link.edges().size() == 2 * m;
  for (std::size_t v = 0; v < link.vertex_count(); ++v) cycle = cycle && link.degree(v) == 2;
  out << "central link: " << (cycle ? std::to_string(2 * m) + "-cycle" : std::string("not a cycle")) << "\n";
  auto angles = angle_sum_certificate(std::span<const SignedLetter>(t.boundary), t.corner_angles);
  print_angles(angles, out);
  return cycle && angles.ok ? 0 : 1;
}

int periodic(const std::string& file, std::ostream& out) {
  auto p = load_presentation(file).presentation;
  auto start = find_start_state(p);
  if (!start) {
    out << "no strip vertex: no link contains a 4-cycle through x and y edges\n";
    return 1;
  }
  auto r = find_rectangle(p, *start);
  out << "start: " << r.start.entering.first << " " << r.start.entering.second << " | " << r.start.leaving.first << " "
      << r.start.leaving.second << "\n";
  out << "s = " << r.s() << " (bound " << pigeonhole_bound(p) << ")\n";
  out << "U = " << format_word(r.U) << "\n";
  out << "W = " << format_word(r.W) << "\n";
  out << "boundary = " << r.boundary.str() << "\n";
  out << "a = " << format_word(r.a) << "\n";
  out << "b = " << format_word(r.b) << "\n";
  out << "quadratic: " << yes_no(r.boundary_quadratic()) << "\n";
  out << "commutator: " << yes_no(r.commutator_shape()) << "\n";
  auto tess = angle_sum_certificate(rectangle_tessellation(r), PiMultiple(1, 2));
  out << "tessellation angle sum: " << (tess.ok ? "ok" : "failed (" + tess.diagnostic + ")") << "\n";
  return r.boundary_quadratic() && r.commutator_shape() && tess.ok ? 0 : 1;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polyhedra with prescribed links, Wicks forms and periodic planes", "polyhedra"};
  app.require_subcommand(1, 1);

  std::string file, word, out_file, format = "text";
  std::vector<std::string> files;
  std::optional<std::size_t> m_gon, k_opt;
  std::optional<std::uint64_t> seed;
  std::size_t k = 0, m = 0, max_length = 8;

  auto* check_graph_cmd = app.add_subcommand("check-graph", "Girth, diameter and generalized m-gon test");
  check_graph_cmd->add_option("file", file, "Tableau file")->required();
  check_graph_cmd->add_option("--m-gon", m_gon, "Expected m");

  auto* compat_cmd = app.add_subcommand("compat", "Compatibility of graph sets");
  compat_cmd->add_option("sets", files, "One tableau file per set")->required();
  compat_cmd->add_option("--seed", seed);

  auto* build_cmd = app.add_subcommand("build", "Polygonal presentation from graph sets");
  build_cmd->add_option("sets", files, "One tableau file per set")->required();
  build_cmd->add_option("--k", k_opt, "Use the single set file k times");
  build_cmd->add_option("--seed", seed);
  build_cmd->add_option("--out", out_file);
  build_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "tableau"}));

  auto* verify_cmd = app.add_subcommand("verify-presentation", "Check the presentation axioms");
  verify_cmd->add_option("file", file)->required();

  auto* complex_cmd = app.add_subcommand("build-complex", "Dump the glued complex");
  complex_cmd->add_option("file", file, "Presentation file");
  complex_cmd->add_option("--word", word, "Single-face complex from a word (or @file)");

  auto* links_cmd = app.add_subcommand("verify-links", "Match vertex links to the presentation's graphs");
  links_cmd->add_option("file", file)->required();

  auto* mn_cmd = app.add_subcommand("check-mn", "Link girth and face size condition");
  mn_cmd->add_option("file", file, "Presentation file");
  mn_cmd->add_option("--word", word, "Single-face complex from a word (or @file)");

  auto* wcheck_cmd = app.add_subcommand("wicks-check", "Test the Wicks conditions");
  wcheck_cmd->add_option("word", word, "Word or @file")->required();

  auto* wgenus_cmd = app.add_subcommand("wicks-genus", "Genus of a Wicks form");
  wgenus_cmd->add_option("word", word, "Word or @file")->required();

  auto* wenum_cmd = app.add_subcommand("wicks-enum", "Wicks forms up to isomorphism");
  wenum_cmd->add_option("--max-length", max_length);

  auto* t3_cmd = app.add_subcommand("theorem3", "Periodic plane in a right-angled building");
  t3_cmd->add_option("--k", k)->required();

  auto* t4_cmd = app.add_subcommand("theorem4", "Periodic plane with a generalized m-gon link");
  t4_cmd->add_option("--m", m)->required();

  auto* periodic_cmd = app.add_subcommand("periodic", "Rectangle relator from a strip");
  periodic_cmd->add_option("file", file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check_graph_cmd->parsed()) return check_graph(file, m_gon, out);
    if (compat_cmd->parsed()) return compat(files, seed, out);
    if (build_cmd->parsed()) return build(files, k_opt, seed, out_file, format, out);
    if (verify_cmd->parsed()) return verify_presentation(file, out);
    if (complex_cmd->parsed()) return build_complex(file, word, out);
    if (links_cmd->parsed()) return verify_links_cmd(file, out);
    if (mn_cmd->parsed()) return check_mn_cmd(file, word, out);
    if (wcheck_cmd->parsed()) return wicks_check(word, out);
    if (wgenus_cmd->parsed()) return wicks_genus(word, out);
    if (wenum_cmd->parsed()) return wicks_enum(max_length, out);
    if (t3_cmd->parsed()) return theorem3(k, out);
    if (t4_cmd->parsed()) return theorem4(m, out);
    if (periodic_cmd->parsed()) return periodic(file, out);
  } catch (const Error& e) {
    if (is_input_error(e.code())) {
      err << e.what() << "\n";
      return 2;
    }
    out << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace polyhedra::cli
