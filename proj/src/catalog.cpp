#include "polyhedra/catalog.hpp"

#include <vector>

#include "polyhedra/error.hpp"

namespace polyhedra::catalog {

namespace {
std::vector<Label> numbered(const std::string& base, std::size_t n) {
  std::vector<Label> out;
  for (std::size_t i = 1; i <= n; ++i) out.emplace_back(base + std::to_string(i));
  return out;
}
}  // namespace

BipartiteGraph complete_bipartite(std::size_t whites, std::size_t blacks) {
  std::vector<BipartiteGraph::Edge> edges;
  for (std::size_t w = 0; w < whites; ++w) {
    for (std::size_t b = 0; b < blacks; ++b) edges.push_back({w, b});
  }
  return BipartiteGraph("K" + std::to_string(whites) + "_" + std::to_string(blacks), numbered("y", whites),
                        numbered("x", blacks), std::move(edges));
}

BipartiteGraph even_cycle(std::size_t m) {
  if (m < 2) throw Error(ErrorCode::BadParameter, "even_cycle needs m >= 2");
  std::vector<BipartiteGraph::Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    edges.push_back({i, i});
    edges.push_back({i, (i + 1) % m});
  }
  return BipartiteGraph("C" + std::to_string(2 * m), numbered("y", m), numbered("x", m), std::move(edges));
}

BipartiteGraph heawood() {
  std::vector<BipartiteGraph::Edge> edges;
  for (std::size_t line = 0; line < 7; ++line) {
    for (std::size_t offset : {0u, 1u, 3u}) edges.push_back({line, (line + offset) % 7});
  }
  return BipartiteGraph("heawood", numbered("y", 7), numbered("x", 7), std::move(edges));
}

BipartiteGraph path(std::size_t edge_count) {
  std::size_t whites = edge_count / 2 + 1;
  std::size_t blacks = (edge_count + 1) / 2;
  std::vector<BipartiteGraph::Edge> edges;
  for (std::size_t i = 0; i < edge_count; ++i) {
    // edge i joins y_{ceil(i/2)} and x_{floor(i/2)}
    edges.push_back({(i + 1) / 2, i / 2});
  }
  return BipartiteGraph("P" + std::to_string(edge_count), numbered("y", whites), numbered("x", blacks),
                        std::move(edges));
}

}  // namespace polyhedra::catalog
