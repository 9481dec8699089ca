#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polyhedra/label.hpp"

namespace polyhedra {

/// Undirected multigraph on vertices 0..n-1; edges keep their identity so
/// parallel edges are distinguishable. Loops are not supported.
class Multigraph {
 public:
  struct Incidence {
    std::size_t neighbor;
    std::size_t edge;
  };

  explicit Multigraph(std::size_t vertex_count) : adjacency_(vertex_count) {}

  std::size_t add_edge(std::size_t u, std::size_t v);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  const std::vector<Incidence>& neighbors(std::size_t v) const { return adjacency_[v]; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

 private:
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Shortest cycle length; nullopt means the graph is a forest.
using Girth = std::optional<std::size_t>;

std::string format_girth(const Girth& g);

Girth girth(const Multigraph& g);
bool is_connected(const Multigraph& g);
/// BFS distances from `source`; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> distances_from(const Multigraph& g, std::size_t source);
/// Throws DisconnectedGraph.
std::size_t diameter(const Multigraph& g);

/// Bipartite (multi)graph with white and black parts.
///
/// Unified vertex numbering used by every index-based query: whites occupy
/// 0..W-1 and blacks W..W+B-1.
class BipartiteGraph {
 public:
  struct Edge {
    std::size_t white;
    std::size_t black;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  BipartiteGraph() = default;
  /// Throws InvalidGraph on duplicate labels, overlapping parts or bad indices.
  BipartiteGraph(std::string name, std::vector<Label> whites, std::vector<Label> blacks,
                 std::vector<Edge> edges);

  /// Edges given as (white, black) label pairs; both must be declared.
  static BipartiteGraph from_labels(std::string name, std::vector<Label> whites,
                                    std::vector<Label> blacks,
                                    const std::vector<std::pair<Label, Label>>& edges);

  const std::string& name() const { return name_; }
  const std::vector<Label>& whites() const { return whites_; }
  const std::vector<Label>& blacks() const { return blacks_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t white_count() const { return whites_.size(); }
  std::size_t black_count() const { return blacks_.size(); }
  std::size_t vertex_count() const { return whites_.size() + blacks_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::size_t white_degree(std::size_t w) const;
  std::size_t black_degree(std::size_t b) const;

  std::optional<std::size_t> find_white(const Label& l) const;
  std::optional<std::size_t> find_black(const Label& l) const;
  /// Black neighbours of white `w`, with multiplicity, in edge order.
  std::vector<std::size_t> black_neighbors(std::size_t w) const;
  bool incident(const Label& white, const Label& black) const;

  bool is_white(std::size_t v) const { return v < whites_.size(); }
  const Label& vertex_label(std::size_t v) const;

  Multigraph multigraph() const;

  BipartiteGraph renamed(std::string name) const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  std::string name_;
  std::vector<Label> whites_;
  std::vector<Label> blacks_;
  std::vector<Edge> edges_;
};

/// One set 𝒢_i of connected bipartite graphs; names must be unique.
class GraphSet {
 public:
  GraphSet() = default;
  explicit GraphSet(std::vector<BipartiteGraph> graphs);

  const std::vector<BipartiteGraph>& graphs() const { return graphs_; }
  std::size_t white_count() const;

 private:
  std::vector<BipartiteGraph> graphs_;
};

Girth girth(const BipartiteGraph& g);
bool is_connected(const BipartiteGraph& g);
std::size_t diameter(const BipartiteGraph& g);

struct MGonVerdict {
  bool ok = false;
  std::string diagnostic;
};

/// Connected, min degree >= 2, girth 2m and diameter m, checked in that order.
MGonVerdict is_generalized_m_gon(const BipartiteGraph& g, std::size_t m);

/// Swaps the colour classes; labels and edge multiset are kept.
BipartiteGraph dual(const BipartiteGraph& g);

/// image[v] is the vertex of g2 (unified numbering) matched to vertex v of g1.
using VertexBijection = std::vector<std::size_t>;

std::optional<VertexBijection> are_isomorphic(const BipartiteGraph& g1, const BipartiteGraph& g2,
                                              bool respect_colors);

struct WhiteRef {
  std::size_t graph;
  std::size_t white;
  friend bool operator==(const WhiteRef&, const WhiteRef&) = default;
};

/// aligned[j][m] is the m-th white of set j; α_j sends aligned[0][m] to
/// aligned[j][m] and preserves degrees.
struct Compatibility {
  bool compatible = false;
  std::string reason;
  std::vector<std::vector<WhiteRef>> aligned;
};

/// Whites are sorted by (degree, graph, label) and matched positionally. With a
/// seed, whites of equal degree in sets j >= 2 are shuffled reproducibly.
/// Throws DisconnectedGraph.
Compatibility are_compatible(std::span<const GraphSet> sets,
                             std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace polyhedra
