#include "polyhedra/tableau.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "polyhedra/error.hpp"

namespace polyhedra {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == '\n')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '\n') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

namespace {

struct Draft {
  std::string name;
  std::vector<Label> whites;
  std::vector<Label> blacks;
  std::map<Label, std::size_t> black_index;
  std::vector<BipartiteGraph::Edge> edges;

  BipartiteGraph finish() {
    return BipartiteGraph(std::move(name), std::move(whites), std::move(blacks), std::move(edges));
  }
};

}  // namespace

std::vector<BipartiteGraph> parse_tableaux(std::string_view text) {
  std::vector<BipartiteGraph> graphs;
  std::optional<Draft> draft;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorCode::Parse, "tableau line " + std::to_string(line_no) + ": " + msg);
  };
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto tokens = split_ws(line);
    if (tokens.front() == "graph") {
      if (tokens.size() != 2) fail("expected `graph <name>`");
      if (draft) graphs.push_back(draft->finish());
      draft.emplace();
      draft->name = std::string(tokens[1]);
      continue;
    }
    if (!draft) fail("tableau row before any `graph` header");
    auto colon = line.find(':');
    if (colon == std::string_view::npos) fail("expected `<white>: <black> ...`");
    auto white_tok = trim(line.substr(0, colon));
    try {
      std::size_t w = draft->whites.size();
      draft->whites.push_back(parse_label(white_tok));
      for (auto tok : split_ws(line.substr(colon + 1))) {
        Label b = parse_label(tok);
        auto [it, fresh] = draft->black_index.emplace(b, draft->blacks.size());
        if (fresh) draft->blacks.push_back(b);
        draft->edges.push_back({w, it->second});
      }
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  if (draft) graphs.push_back(draft->finish());
  return graphs;
}

BipartiteGraph parse_tableau(std::string_view text) {
  auto graphs = parse_tableaux(text);
  if (graphs.size() != 1) {
    throw Error(ErrorCode::Parse, "expected one graph, found " + std::to_string(graphs.size()));
  }
  return graphs.front();
}

std::string format_tableau(const BipartiteGraph& g) {
  std::string out = "graph " + g.name() + "\n";
  for (std::size_t w = 0; w < g.white_count(); ++w) {
    out += g.whites()[w].str() + ":";
    for (std::size_t b : g.black_neighbors(w)) out += " " + g.blacks()[b].str();
    out += "\n";
  }
  return out;
}

std::string format_tableaux(const std::vector<BipartiteGraph>& graphs) {
  std::string out;
  for (const auto& g : graphs) out += format_tableau(g);
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<BipartiteGraph> load_tableau_file(const std::filesystem::path& path) {
  return parse_tableaux(read_text_file(path));
}

}  // namespace polyhedra
