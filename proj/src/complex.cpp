#include "polyhedra/complex.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "polyhedra/error.hpp"
#include "polyhedra/tableau.hpp"

namespace polyhedra {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

Label suffixed(const Label& l, const char* suffix) { return Label(l.base + suffix, l.family); }

}  // namespace

std::size_t LinkGraph::local_index(std::size_t end) const {
  auto it = std::lower_bound(ends.begin(), ends.end(), end);
  return static_cast<std::size_t>(it - ends.begin());
}

Multigraph LinkGraph::multigraph() const {
  Multigraph g(ends.size());
  for (const auto& [a, b] : corners) g.add_edge(a, b);
  return g;
}

std::optional<BipartiteGraph> LinkGraph::as_bipartite(std::string name) const {
  const std::size_t n = ends.size();
  std::vector<int> white(n, -1);
  bool by_orientation = std::all_of(corners.begin(), corners.end(), [&](const auto& c) {
    return end_is_head(ends[c.first]) != end_is_head(ends[c.second]);
  });
  if (by_orientation) {
    for (std::size_t i = 0; i < n; ++i) white[i] = end_is_head(ends[i]) ? 1 : 0;
  } else {
    auto g = multigraph();
    for (std::size_t s = 0; s < n; ++s) {
      if (white[s] != -1) continue;
      white[s] = end_is_head(ends[s]) ? 1 : 0;
      std::deque<std::size_t> queue{s};
      while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (const auto& inc : g.neighbors(u)) {
          if (white[inc.neighbor] == -1) {
            white[inc.neighbor] = 1 - white[u];
            queue.push_back(inc.neighbor);
          } else if (white[inc.neighbor] == white[u]) {
            return std::nullopt;
          }
        }
      }
    }
  }

  std::vector<Label> labels = end_labels;
  if (std::set<Label>(labels.begin(), labels.end()).size() != labels.size()) {
    for (std::size_t i = 0; i < n; ++i) labels[i] = suffixed(labels[i], end_is_head(ends[i]) ? "_h" : "_t");
  }
  std::vector<Label> whites, blacks;
  std::vector<std::size_t> part_index(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& part = white[i] ? whites : blacks;
    part_index[i] = part.size();
    part.push_back(labels[i]);
  }
  std::vector<BipartiteGraph::Edge> edges;
  for (const auto& [a, b] : corners) {
    std::size_t w = white[a] ? a : b;
    std::size_t bl = white[a] ? b : a;
    edges.push_back({part_index[w], part_index[bl]});
  }
  return BipartiteGraph(std::move(name), std::move(whites), std::move(blacks), std::move(edges));
}

Polyhedron Polyhedron::from_faces(std::vector<FacePolygon> faces, std::map<Label, Label> head_names) {
  Polyhedron K;
  std::set<Label> labels;
  for (const auto& f : faces) {
    if (f.boundary.empty()) throw Error(ErrorCode::BadParameter, "face with empty boundary");
    for (const auto& s : f.boundary) labels.insert(s.base);
  }
  K.edges_.assign(labels.begin(), labels.end());
  K.faces_ = std::move(faces);
  K.named_by_lambda_ = !head_names.empty();
  K.head_names_ = std::move(head_names);

  DisjointSets sets(2 * K.edges_.size());
  for (std::size_t f = 0; f < K.faces_.size(); ++f) {
    const auto& b = K.faces_[f].boundary;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const auto& here = b[i];
      const auto& next = b[(i + 1) % b.size()];
      std::size_t in = end_id(K.edge_index(here.base), here.sign > 0 ? End::Head : End::Tail);
      std::size_t out = end_id(K.edge_index(next.base), next.sign > 0 ? End::Tail : End::Head);
      K.corners_.push_back({f, i, in, out});
      sets.unite(in, out);
    }
  }

  // Roots are the smallest member, so classes come out ordered by smallest end.
  std::map<std::size_t, std::size_t> class_of_root;
  K.end_vertex_.resize(2 * K.edges_.size());
  for (std::size_t e = 0; e < K.end_vertex_.size(); ++e) {
    std::size_t root = sets.find(e);
    auto [it, fresh] = class_of_root.emplace(root, K.vertex_classes_.size());
    if (fresh) K.vertex_classes_.emplace_back();
    K.vertex_classes_[it->second].push_back(e);
    K.end_vertex_[e] = it->second;
  }
  return K;
}

std::size_t Polyhedron::edge_index(const Label& l) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), l);
  if (it == edges_.end() || *it != l) throw Error(ErrorCode::UnknownLabel, l.str() + " is not an edge");
  return static_cast<std::size_t>(it - edges_.begin());
}

Label Polyhedron::end_label(std::size_t end) const {
  const Label& l = edges_[end_edge(end)];
  if (named_by_lambda_) {
    if (!end_is_head(end)) return l;
    auto it = head_names_.find(l);
    return it != head_names_.end() ? it->second : suffixed(l, "_h");
  }
  return suffixed(l, end_is_head(end) ? "_h" : "_t");
}

Polyhedron build_from_presentation(const PolygonalPresentation& p) {
  auto report = verify_axioms(p);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw Error(ErrorCode::AxiomViolation, std::string(to_string(v.axiom)) + ": " + v.detail);
  }
  std::vector<FacePolygon> faces;
  for (const auto& t : p.tuples()) {
    FacePolygon f;
    for (const auto& l : t) f.boundary.emplace_back(l, 1);
    faces.push_back(std::move(f));
  }
  return Polyhedron::from_faces(std::move(faces), p.lambda());
}

Polyhedron build_from_word(std::span<const SignedLetter> w) {
  if (!is_quadratic(w)) throw Error(ErrorCode::NotQuadratic, format_word(w));
  return Polyhedron::from_faces({FacePolygon{LinearWord(w.begin(), w.end())}});
}

Polyhedron build_from_word(const CyclicWord& w) { return build_from_word(std::span<const SignedLetter>(w.letters())); }

LinkGraph link_at(const Polyhedron& K, std::size_t vertex) {
  if (vertex >= K.vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(vertex));
  LinkGraph link;
  link.vertex = vertex;
  link.ends = K.vertex_classes()[vertex];
  for (std::size_t e : link.ends) link.end_labels.push_back(K.end_label(e));
  for (const auto& c : K.corners()) {
    if (K.vertex_of_corner(c) != vertex) continue;
    link.corners.emplace_back(link.local_index(c.incoming), link.local_index(c.outgoing));
  }
  return link;
}

LinkMatch verify_links(const Polyhedron& K, std::span<const BipartiteGraph> expected) {
  LinkMatch match;
  const std::size_t nv = K.vertex_count();
  if (nv != expected.size()) {
    match.diagnostic = std::to_string(nv) + " vertices but " + std::to_string(expected.size()) + " expected links";
    return match;
  }
  std::vector<std::vector<std::size_t>> candidates(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    auto link = link_at(K, v).as_bipartite("v" + std::to_string(v));
    if (!link) continue;
    for (std::size_t j = 0; j < expected.size(); ++j) {
      if (are_isomorphic(*link, expected[j], true)) candidates[v].push_back(j);
    }
  }

  // Kuhn's augmenting paths.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(expected.size(), kNone);
  std::vector<bool> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t v) {
    for (std::size_t j : candidates[v]) {
      if (visited[j]) continue;
      visited[j] = true;
      if (owner[j] == kNone || augment(owner[j])) {
        owner[j] = v;
        return true;
      }
    }
    return false;
  };
  for (std::size_t v = 0; v < nv; ++v) {
    visited.assign(expected.size(), false);
    augment(v);
  }

  match.assignment.assign(nv, kNone);
  for (std::size_t j = 0; j < owner.size(); ++j) {
    if (owner[j] != kNone) match.assignment[owner[j]] = j;
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (match.assignment[v] == kNone) {
      match.unmatched_vertex = v;
      match.diagnostic = candidates[v].empty() ? "link at v" + std::to_string(v) + " matches no expected graph"
                                               : "no perfect matching; v" + std::to_string(v) + " left over";
      return match;
    }
  }
  match.ok = true;
  return match;
}

CellCounts cell_counts(const Polyhedron& K) { return {K.vertex_count(), K.edge_count(), K.face_count()}; }

CellCounts remark_counts(const PolygonalPresentation& p) {
  CellCounts c;
  c.vertices = p.graphs().size();
  std::size_t s = 0;
  for (const auto& g : p.graphs()) {
    s += g.vertex_count();
    c.faces += g.edge_count();
  }
  c.edges = p.k() * s;
  return c;
}

MnCheck check_mn(const Polyhedron& K) {
  MnCheck out;
  for (std::size_t v = 0; v < K.vertex_count(); ++v) {
    auto g = link_at(K, v).multigraph();
    if (!is_connected(g)) throw Error(ErrorCode::DisconnectedLink, "link at v" + std::to_string(v));
    auto gi = girth(g);
    if (gi && (!out.m || *gi < *out.m)) out.m = gi;
  }
  if (K.face_count() == 0) return out;
  out.n = K.faces().front().boundary.size();
  for (const auto& f : K.faces()) out.n = std::min(out.n, f.boundary.size());
  if (out.m) {
    out.satisfies = *out.m * out.n >= 2 * (*out.m + out.n);
  } else {
    // m -> infinity: m(n - 2) >= 2n eventually holds iff n > 2.
    out.satisfies = out.n > 2;
  }
  return out;
}

std::string format_complex(const Polyhedron& K) {
  std::string out;
  for (std::size_t f = 0; f < K.face_count(); ++f) {
    out += "face " + std::to_string(f) + ": " + format_word(K.faces()[f].boundary) + "\n";
  }
  out += "vertices\n";
  for (std::size_t v = 0; v < K.vertex_count(); ++v) {
    std::string in, outgoing;
    for (std::size_t e : K.vertex_classes()[v]) {
      (end_is_head(e) ? in : outgoing) += " " + K.edges()[end_edge(e)].str();
    }
    out += "v" + std::to_string(v) + ": in" + in + " out" + outgoing + "\n";
  }
  out += "links\n";
  for (std::size_t v = 0; v < K.vertex_count(); ++v) {
    auto link = link_at(K, v).as_bipartite("v" + std::to_string(v));
    if (link) {
      out += format_tableau(*link);
    } else {
      out += "# v" + std::to_string(v) + ": link is not bipartite\n";
    }
  }
  return out;
}

}  // namespace polyhedra
