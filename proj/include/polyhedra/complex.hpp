#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyhedra/bigraph.hpp"
#include "polyhedra/presentation.hpp"
#include "polyhedra/word.hpp"

namespace polyhedra {

using Side = SignedLetter;

struct FacePolygon {
  std::vector<Side> boundary;
};

enum class End { Tail, Head };

/// Edge-end id: 2 * edge + (Head ? 1 : 0).
constexpr std::size_t end_id(std::size_t edge, End e) { return 2 * edge + (e == End::Head ? 1 : 0); }
constexpr std::size_t end_edge(std::size_t id) { return id / 2; }
constexpr bool end_is_head(std::size_t id) { return id % 2 == 1; }

/// A corner of a face: the end of side `position` meets the start of the next side.
struct Corner {
  std::size_t face;
  std::size_t position;
  std::size_t incoming;  // edge-end where side `position` finishes
  std::size_t outgoing;  // edge-end where the following side starts
};

/// Link at one vertex class: its edge-ends as vertices, one edge per corner.
struct LinkGraph {
  std::size_t vertex = 0;
  std::vector<std::size_t> ends;
  std::vector<Label> end_labels;
  std::vector<std::pair<std::size_t, std::size_t>> corners;  // local (incoming, outgoing)

  std::size_t local_index(std::size_t end) const;
  Multigraph multigraph() const;
  /// Heads white and tails black when every corner joins a head to a tail,
  /// otherwise a BFS two-colouring; nullopt if the link has an odd cycle.
  std::optional<BipartiteGraph> as_bipartite(std::string name) const;
};

/// 2-complex from oriented labelled polygons; equally labelled sides are one
/// edge, glued respecting orientation. Vertex classes are the union-find
/// components of edge-ends joined by corners.
class Polyhedron {
 public:
  Polyhedron() = default;
  /// `head_names` (λ for presentation complexes) names the head end of an edge
  /// in link output; without it ends print as `<base>_t` / `<base>_h`.
  static Polyhedron from_faces(std::vector<FacePolygon> faces, std::map<Label, Label> head_names = {});

  const std::vector<FacePolygon>& faces() const { return faces_; }
  const std::vector<Label>& edges() const { return edges_; }
  const std::vector<Corner>& corners() const { return corners_; }
  /// Edge-ends of each vertex class, sorted; classes ordered by smallest end.
  const std::vector<std::vector<std::size_t>>& vertex_classes() const { return vertex_classes_; }
  std::size_t vertex_of_end(std::size_t end) const { return end_vertex_[end]; }
  std::size_t vertex_of_corner(const Corner& c) const { return end_vertex_[c.incoming]; }
  std::size_t edge_index(const Label& l) const;

  Label end_label(std::size_t end) const;

  std::size_t vertex_count() const { return vertex_classes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t face_count() const { return faces_.size(); }

 private:
  std::vector<FacePolygon> faces_;
  std::vector<Label> edges_;
  std::vector<Corner> corners_;
  std::vector<std::vector<std::size_t>> vertex_classes_;
  std::vector<std::size_t> end_vertex_;
  std::map<Label, Label> head_names_;
  bool named_by_lambda_ = false;
};

/// One face per cyclic tuple, all sides positive. Throws AxiomViolation.
Polyhedron build_from_presentation(const PolygonalPresentation& p);

/// Single face; throws NotQuadratic unless every letter occurs exactly twice.
Polyhedron build_from_word(const CyclicWord& w);
Polyhedron build_from_word(std::span<const SignedLetter> w);

/// Throws UnknownVertex.
LinkGraph link_at(const Polyhedron& K, std::size_t vertex);

struct LinkMatch {
  bool ok = false;
  std::vector<std::size_t> assignment;  // vertex class -> index into `expected`
  std::optional<std::size_t> unmatched_vertex;
  std::string diagnostic;
};

/// Perfect matching of vertex classes to `expected` under colour-preserving
/// isomorphism of links.
LinkMatch verify_links(const Polyhedron& K, std::span<const BipartiteGraph> expected);

struct CellCounts {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  friend bool operator==(const CellCounts&, const CellCounts&) = default;
};

CellCounts cell_counts(const Polyhedron& K);

/// The closed-form counts n, k·Σ s_i, Σ t_i over the presentation's graphs
/// (s_i vertices, t_i edges of graph i, k the face length).
CellCounts remark_counts(const PolygonalPresentation& p);

struct MnCheck {
  Girth m;            // smallest link girth
  std::size_t n = 0;  // smallest face length
  bool satisfies = false;
};

/// Throws DisconnectedLink.
MnCheck check_mn(const Polyhedron& K);

/// `face <id>: ...`, then `vertices` and `links` sections.
std::string format_complex(const Polyhedron& K);

}  // namespace polyhedra
