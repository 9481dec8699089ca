#include "polyhedra/presentation_io.hpp"

#include <sstream>

#include "polyhedra/error.hpp"
#include "polyhedra/tableau.hpp"

namespace polyhedra {

namespace {

enum class Section { None, Graphs, Lambda, Tuples };

std::string emit(const PolygonalPresentation& p, const std::vector<std::string>& refs, std::size_t skip) {
  std::string out = "k " + std::to_string(p.k()) + "\ngraphs\n";
  for (const auto& r : refs) out += r + "\n";
  for (std::size_t i = skip; i < p.graphs().size(); ++i) out += format_tableau(p.graphs()[i]);
  out += "lambda\n";
  for (const auto& [x, y] : p.lambda()) out += x.str() + " -> " + y.str() + "\n";
  out += "tuples\n";
  for (const auto& t : p.tuples()) {
    for (std::size_t i = 0; i < t.size(); ++i) out += (i ? " " : "") + t[i].str();
    out += "\n";
  }
  return out;
}

}  // namespace

PresentationFile parse_presentation(std::string_view text, const std::filesystem::path& base_dir) {
  PresentationFile file;
  std::optional<std::size_t> k;
  std::string inline_text;
  std::map<Label, Label> lambda;
  std::vector<Tuple> tuples;
  Section section = Section::None;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorCode::Parse, "presentation line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto tokens = split_ws(line);
    if (tokens.size() == 1 && (tokens[0] == "graphs" || tokens[0] == "lambda" || tokens[0] == "tuples")) {
      section = tokens[0] == "graphs" ? Section::Graphs : tokens[0] == "lambda" ? Section::Lambda : Section::Tuples;
      continue;
    }
    try {
      switch (section) {
        case Section::None: {
          if (tokens.size() != 2 || tokens[0] != "k") fail("expected `k <length>` before the sections");
          std::size_t value = std::stoul(std::string(tokens[1]));
          if (value == 0) fail("k must be positive");
          k = value;
          break;
        }
        case Section::Graphs:
          if (tokens[0] == "graph" || line.find(':') != std::string_view::npos) {
            inline_text += std::string(line) + "\n";
          } else {
            if (tokens.size() != 1) fail("graph reference must be a single path");
            file.graph_refs.emplace_back(tokens[0]);
          }
          break;
        case Section::Lambda:
          if (tokens.size() != 3 || tokens[1] != "->") fail("expected `<black> -> <white>`");
          if (!lambda.emplace(parse_label(tokens[0]), parse_label(tokens[2])).second) {
            fail("λ given twice for " + std::string(tokens[0]));
          }
          break;
        case Section::Tuples: {
          Tuple t;
          for (auto tok : tokens) t.push_back(parse_label(tok));
          tuples.push_back(std::move(t));
          break;
        }
      }
    } catch (const std::invalid_argument&) {
      fail("bad number");
    } catch (const std::out_of_range&) {
      fail("bad number");
    }
  }
  if (!k) throw Error(ErrorCode::Parse, "missing `k` line");

  std::vector<BipartiteGraph> graphs;
  for (const auto& ref : file.graph_refs) {
    for (auto& g : load_tableau_file(base_dir / ref)) graphs.push_back(std::move(g));
  }
  file.referenced_graph_count = graphs.size();
  for (auto& g : parse_tableaux(inline_text)) graphs.push_back(std::move(g));

  file.presentation = PolygonalPresentation(std::move(graphs), std::move(lambda), *k);
  for (const auto& t : tuples) file.presentation.add_tuple(t);
  return file;
}

PresentationFile load_presentation(const std::filesystem::path& path) {
  return parse_presentation(read_text_file(path), path.parent_path().empty() ? "." : path.parent_path());
}

std::string format_presentation(const PolygonalPresentation& p) { return emit(p, {}, 0); }

std::string format_presentation(const PresentationFile& f) {
  return emit(f.presentation, f.graph_refs, f.referenced_graph_count);
}

}  // namespace polyhedra
