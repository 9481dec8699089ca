#include "polyhedra/bigraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <tuple>

#include "polyhedra/error.hpp"
#include "polyhedra/shuffle.hpp"

namespace polyhedra {

namespace {
constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
}

std::size_t Multigraph::add_edge(std::size_t u, std::size_t v) {
  std::size_t id = edges_.size();
  edges_.emplace_back(u, v);
  adjacency_[u].push_back({v, id});
  adjacency_[v].push_back({u, id});
  return id;
}

std::string format_girth(const Girth& g) { return g ? std::to_string(*g) : "infinite"; }

Girth girth(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  Girth best;
  std::vector<std::size_t> dist(n);
  std::vector<std::size_t> parent_edge(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::fill(parent_edge.begin(), parent_edge.end(), kUnreached);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      // Nothing shorter can be closed beyond this depth.
      if (best && 2 * dist[u] >= *best) break;
      for (const auto& [w, e] : g.neighbors(u)) {
        if (e == parent_edge[u]) continue;
        if (dist[w] == kUnreached) {
          dist[w] = dist[u] + 1;
          parent_edge[w] = e;
          queue.push_back(w);
        } else {
          std::size_t len = dist[u] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

std::vector<std::size_t> distances_from(const Multigraph& g, std::size_t source) {
  std::vector<std::size_t> dist(g.vertex_count(), kUnreached);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (const auto& inc : g.neighbors(u)) {
      if (dist[inc.neighbor] == kUnreached) {
        dist[inc.neighbor] = dist[u] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

bool is_connected(const Multigraph& g) {
  if (g.vertex_count() == 0) return true;
  auto dist = distances_from(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == kUnreached; });
}

std::size_t diameter(const Multigraph& g) {
  std::size_t best = 0;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    for (std::size_t d : distances_from(g, s)) {
      if (d == kUnreached) throw Error(ErrorCode::DisconnectedGraph, "diameter of a disconnected graph");
      best = std::max(best, d);
    }
  }
  return best;
}

BipartiteGraph::BipartiteGraph(std::string name, std::vector<Label> whites, std::vector<Label> blacks,
                               std::vector<Edge> edges)
    : name_(std::move(name)), whites_(std::move(whites)), blacks_(std::move(blacks)), edges_(std::move(edges)) {
  std::set<Label> seen;
  for (const auto& l : whites_) {
    if (!seen.insert(l).second) throw Error(ErrorCode::InvalidGraph, name_ + ": duplicate white " + l.str());
  }
  for (const auto& l : blacks_) {
    if (!seen.insert(l).second) {
      throw Error(ErrorCode::InvalidGraph, name_ + ": label " + l.str() + " is both white and black, or repeated");
    }
  }
  for (const auto& e : edges_) {
    if (e.white >= whites_.size() || e.black >= blacks_.size()) {
      throw Error(ErrorCode::InvalidGraph, name_ + ": edge endpoint out of range");
    }
  }
}

BipartiteGraph BipartiteGraph::from_labels(std::string name, std::vector<Label> whites,
                                           std::vector<Label> blacks,
                                           const std::vector<std::pair<Label, Label>>& edges) {
  std::map<Label, std::size_t> wi, bi;
  for (std::size_t i = 0; i < whites.size(); ++i) wi.emplace(whites[i], i);
  for (std::size_t i = 0; i < blacks.size(); ++i) bi.emplace(blacks[i], i);
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& [w, b] : edges) {
    auto iw = wi.find(w);
    auto ib = bi.find(b);
    if (iw == wi.end() || ib == bi.end()) {
      throw Error(ErrorCode::InvalidGraph, name + ": undeclared edge endpoint " + w.str() + "-" + b.str());
    }
    out.push_back({iw->second, ib->second});
  }
  return BipartiteGraph(std::move(name), std::move(whites), std::move(blacks), std::move(out));
}

std::size_t BipartiteGraph::white_degree(std::size_t w) const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [w](const Edge& e) { return e.white == w; }));
}

std::size_t BipartiteGraph::black_degree(std::size_t b) const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [b](const Edge& e) { return e.black == b; }));
}

std::optional<std::size_t> BipartiteGraph::find_white(const Label& l) const {
  auto it = std::find(whites_.begin(), whites_.end(), l);
  if (it == whites_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - whites_.begin());
}

std::optional<std::size_t> BipartiteGraph::find_black(const Label& l) const {
  auto it = std::find(blacks_.begin(), blacks_.end(), l);
  if (it == blacks_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - blacks_.begin());
}

std::vector<std::size_t> BipartiteGraph::black_neighbors(std::size_t w) const {
  std::vector<std::size_t> out;
  for (const auto& e : edges_) {
    if (e.white == w) out.push_back(e.black);
  }
  return out;
}

bool BipartiteGraph::incident(const Label& white, const Label& black) const {
  auto w = find_white(white);
  auto b = find_black(black);
  if (!w || !b) return false;
  return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.white == *w && e.black == *b; });
}

const Label& BipartiteGraph::vertex_label(std::size_t v) const {
  return v < whites_.size() ? whites_[v] : blacks_[v - whites_.size()];
}

Multigraph BipartiteGraph::multigraph() const {
  Multigraph g(vertex_count());
  for (const auto& e : edges_) g.add_edge(e.white, whites_.size() + e.black);
  return g;
}

BipartiteGraph BipartiteGraph::renamed(std::string name) const {
  BipartiteGraph g = *this;
  g.name_ = std::move(name);
  return g;
}

GraphSet::GraphSet(std::vector<BipartiteGraph> graphs) : graphs_(std::move(graphs)) {
  std::set<std::string> names;
  for (const auto& g : graphs_) {
    if (!names.insert(g.name()).second) throw Error(ErrorCode::InvalidGraph, "duplicate graph name " + g.name());
  }
}

std::size_t GraphSet::white_count() const {
  std::size_t n = 0;
  for (const auto& g : graphs_) n += g.white_count();
  return n;
}

Girth girth(const BipartiteGraph& g) { return girth(g.multigraph()); }
bool is_connected(const BipartiteGraph& g) { return is_connected(g.multigraph()); }
std::size_t diameter(const BipartiteGraph& g) { return diameter(g.multigraph()); }

MGonVerdict is_generalized_m_gon(const BipartiteGraph& g, std::size_t m) {
  auto mg = g.multigraph();
  if (!is_connected(mg)) return {false, "not connected"};
  for (std::size_t v = 0; v < mg.vertex_count(); ++v) {
    if (mg.degree(v) < 2) return {false, "min degree < 2 (vertex " + g.vertex_label(v).str() + ")"};
  }
  auto gi = girth(mg);
  if (!gi || *gi != 2 * m) return {false, "girth " + format_girth(gi) + " != " + std::to_string(2 * m)};
  auto d = diameter(mg);
  if (d != m) return {false, "diameter " + std::to_string(d) + " != " + std::to_string(m)};
  return {true, "generalized " + std::to_string(m) + "-gon"};
}

BipartiteGraph dual(const BipartiteGraph& g) {
  std::vector<BipartiteGraph::Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.push_back({e.black, e.white});
  return BipartiteGraph(g.name(), g.blacks(), g.whites(), std::move(edges));
}

namespace {

using CountMatrix = std::vector<std::vector<unsigned>>;

CountMatrix multiplicities(const Multigraph& g) {
  CountMatrix m(g.vertex_count(), std::vector<unsigned>(g.vertex_count(), 0));
  for (const auto& [u, v] : g.edges()) {
    ++m[u][v];
    ++m[v][u];
  }
  return m;
}

// BFS order over every component keeps each newly placed vertex adjacent to
// an already placed one, which is what makes the consistency check prune.
std::vector<std::size_t> search_order(const Multigraph& g) {
  std::vector<std::size_t> order;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::size_t> roots(g.vertex_count());
  for (std::size_t i = 0; i < roots.size(); ++i) roots[i] = i;
  std::stable_sort(roots.begin(), roots.end(), [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
  for (std::size_t r : roots) {
    if (seen[r]) continue;
    seen[r] = true;
    std::deque<std::size_t> queue{r};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (const auto& inc : g.neighbors(u)) {
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = true;
          queue.push_back(inc.neighbor);
        }
      }
    }
  }
  return order;
}

struct IsoSearch {
  const BipartiteGraph& g1;
  const BipartiteGraph& g2;
  bool respect_colors;
  Multigraph m1, m2;
  CountMatrix c1, c2;
  std::vector<std::size_t> order;
  VertexBijection image;
  std::vector<bool> used;

  IsoSearch(const BipartiteGraph& a, const BipartiteGraph& b, bool colors)
      : g1(a), g2(b), respect_colors(colors), m1(a.multigraph()), m2(b.multigraph()),
        c1(multiplicities(m1)), c2(multiplicities(m2)), order(search_order(m1)),
        image(a.vertex_count(), kUnreached), used(b.vertex_count(), false) {}

  bool feasible(std::size_t v, std::size_t w) const {
    if (m1.degree(v) != m2.degree(w)) return false;
    if (respect_colors && g1.is_white(v) != g2.is_white(w)) return false;
    for (std::size_t u = 0; u < image.size(); ++u) {
      if (image[u] == kUnreached) continue;
      if (c1[v][u] != c2[w][image[u]]) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    std::size_t v = order[depth];
    for (std::size_t w = 0; w < used.size(); ++w) {
      if (used[w] || !feasible(v, w)) continue;
      image[v] = w;
      used[w] = true;
      if (extend(depth + 1)) return true;
      image[v] = kUnreached;
      used[w] = false;
    }
    return false;
  }
};

std::vector<std::size_t> sorted_degrees(const Multigraph& g) {
  std::vector<std::size_t> d(g.vertex_count());
  for (std::size_t v = 0; v < d.size(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::optional<VertexBijection> are_isomorphic(const BipartiteGraph& g1, const BipartiteGraph& g2,
                                              bool respect_colors) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  if (respect_colors && g1.white_count() != g2.white_count()) return std::nullopt;
  IsoSearch search(g1, g2, respect_colors);
  if (sorted_degrees(search.m1) != sorted_degrees(search.m2)) return std::nullopt;
  if (!search.extend(0)) return std::nullopt;
  return search.image;
}

Compatibility are_compatible(std::span<const GraphSet> sets, std::optional<std::uint64_t> seed) {
  Compatibility out;
  struct Entry {
    std::size_t degree;
    WhiteRef ref;
    const Label* label;
  };
  std::vector<std::vector<Entry>> entries(sets.size());
  for (std::size_t j = 0; j < sets.size(); ++j) {
    const auto& graphs = sets[j].graphs();
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      if (!is_connected(graphs[gi])) {
        throw Error(ErrorCode::DisconnectedGraph, "graph " + graphs[gi].name() + " in set " + std::to_string(j + 1));
      }
      for (std::size_t w = 0; w < graphs[gi].white_count(); ++w) {
        entries[j].push_back({graphs[gi].white_degree(w), {gi, w}, &graphs[gi].whites()[w]});
      }
    }
    std::sort(entries[j].begin(), entries[j].end(), [](const Entry& a, const Entry& b) {
      return std::tie(a.degree, a.ref.graph, *a.label) < std::tie(b.degree, b.ref.graph, *b.label);
    });
  }
  for (std::size_t j = 1; j < sets.size(); ++j) {
    if (entries[j].size() != entries[0].size()) {
      out.reason = "set " + std::to_string(j + 1) + " has " + std::to_string(entries[j].size()) +
                   " white vertices, set 1 has " + std::to_string(entries[0].size());
      return out;
    }
    for (std::size_t m = 0; m < entries[0].size(); ++m) {
      if (entries[j][m].degree != entries[0][m].degree) {
        out.reason = "white degree multisets of sets 1 and " + std::to_string(j + 1) + " differ";
        return out;
      }
    }
  }
  if (seed) {
    Shuffler shuffler(*seed);
    for (std::size_t j = 1; j < sets.size(); ++j) {
      auto& e = entries[j];
      for (std::size_t lo = 0; lo < e.size();) {
        std::size_t hi = lo;
        while (hi < e.size() && e[hi].degree == e[lo].degree) ++hi;
        shuffler.shuffle(e.begin() + static_cast<std::ptrdiff_t>(lo), e.begin() + static_cast<std::ptrdiff_t>(hi));
        lo = hi;
      }
    }
  }
  out.compatible = true;
  out.aligned.resize(sets.size());
  for (std::size_t j = 0; j < sets.size(); ++j) {
    for (const auto& e : entries[j]) out.aligned[j].push_back(e.ref);
  }
  return out;
}

}  // namespace polyhedra
