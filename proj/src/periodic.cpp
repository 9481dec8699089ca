#include "polyhedra/periodic.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "polyhedra/error.hpp"

namespace polyhedra {

PiMultiple::PiMultiple(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::BadParameter, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

std::string PiMultiple::str() const {
  if (num_ == 0) return "0";
  std::string s = num_ == 1 ? "pi" : num_ == -1 ? "-pi" : std::to_string(num_) + "pi";
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

PiMultiple operator+(PiMultiple a, PiMultiple b) {
  return PiMultiple(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

PiMultiple operator*(std::int64_t n, PiMultiple a) { return PiMultiple(n * a.num_, a.den_); }

namespace {

const PiMultiple kFullTurn(2);

AngleVerdict certify(const Polyhedron& K, const std::function<PiMultiple(const Corner&)>& angle_of) {
  AngleVerdict verdict;
  verdict.vertices.resize(K.vertex_count());
  for (std::size_t v = 0; v < K.vertex_count(); ++v) verdict.vertices[v].vertex = v;
  for (const auto& c : K.corners()) {
    auto a = angle_of(c);
    if (a.num() <= 0) throw Error(ErrorCode::BadParameter, "corner angle must be positive");
    auto& slot = verdict.vertices[K.vertex_of_corner(c)];
    slot.corners++;
    slot.total = slot.total + a;
  }
  verdict.ok = true;
  for (const auto& v : verdict.vertices) {
    if (v.total != kFullTurn) {
      verdict.ok = false;
      verdict.diagnostic = "vertex v" + std::to_string(v.vertex) + ": " + std::to_string(v.corners) +
                           " corners summing to " + v.total.str() + ", expected 2pi";
      break;
    }
  }
  return verdict;
}

}  // namespace

AngleVerdict angle_sum_certificate(const Polyhedron& K, PiMultiple corner_angle) {
  return certify(K, [&](const Corner&) { return corner_angle; });
}

AngleVerdict angle_sum_certificate(const CyclicWord& w, PiMultiple corner_angle) {
  if (corner_angle.num() <= 0) throw Error(ErrorCode::BadParameter, "corner angle must be positive");
  return angle_sum_certificate(build_from_word(w), corner_angle);
}

AngleVerdict angle_sum_certificate(std::span<const SignedLetter> w, std::span<const PiMultiple> corner_angles) {
  if (corner_angles.size() != w.size()) {
    throw Error(ErrorCode::BadParameter, std::to_string(corner_angles.size()) + " angles for " +
                                             std::to_string(w.size()) + " corners");
  }
  auto K = build_from_word(w);
  return certify(K, [&](const Corner& c) { return corner_angles[c.position]; });
}

// ---------------------------------------------------------------------------
// Strip geometry

P2Shape analyze_p2_shape(const PolygonalPresentation& p) {
  if (p.k() != 4) throw Error(ErrorCode::NotP2Shape, "tuples have length " + std::to_string(p.k()) + ", expected 4");
  std::map<Label, std::vector<std::pair<const Tuple*, std::size_t>>> occurrences;
  for (const auto& t : p.tuples()) {
    if (t.size() != 4) throw Error(ErrorCode::NotP2Shape, "tuple of length " + std::to_string(t.size()));
    for (std::size_t i = 0; i < 4; ++i) occurrences[t[i]].emplace_back(&t, i);
  }
  // Relative classes per connected component, then shifted so the least
  // label of each component is an x.
  std::map<Label, int> cls;
  for (const auto& [root, unused] : occurrences) {
    if (cls.count(root)) continue;
    std::vector<Label> component{root};
    cls[root] = 0;
    for (std::size_t head = 0; head < component.size(); ++head) {
      Label cur = component[head];
      for (auto [t, i] : occurrences[cur]) {
        for (std::size_t j = 0; j < 4; ++j) {
          int want = (cls[cur] + static_cast<int>(j) - static_cast<int>(i) + 8) % 4;
          const Label& other = (*t)[j];
          auto it = cls.find(other);
          if (it == cls.end()) {
            cls[other] = want;
            component.push_back(other);
          } else if (it->second != want) {
            throw Error(ErrorCode::NotP2Shape, "letter " + other.str() + " occurs in two different roles");
          }
        }
      }
    }
    Label least = *std::min_element(component.begin(), component.end());
    int shift = cls[least];
    for (const auto& l : component) cls[l] = (cls[l] - shift + 4) % 4;
  }
  P2Shape shape;
  for (const auto& [l, c] : cls) {
    shape.family[l] = static_cast<StripFamily>(c);
    if (c == 0) shape.x_letters.push_back(l);
    if (c == 1) shape.y_letters.push_back(l);
  }
  for (const auto& t : p.tuples()) {
    std::size_t xi = 0;
    while (cls[t[xi]] != 0) ++xi;
    const Label& x = t[xi];
    const Label& u = t[(xi + 2) % 4];
    auto [it, inserted] = shape.x_to_u.emplace(x, u);
    if (!inserted && it->second != u) {
      throw Error(ErrorCode::NotP2Shape, "x letter " + x.str() + " faces both " + it->second.str() + " and " + u.str());
    }
  }
  return shape;
}

namespace {

struct Square {
  Label x, y, u, v;
  Tuple tuple() const { return {x, y, u, v}; }
};

struct StripIndex {
  P2Shape shape;
  std::map<std::pair<Label, Label>, Square> by_xy;
  std::map<std::pair<Label, Label>, Square> by_vx;

  explicit StripIndex(const PolygonalPresentation& p) : shape(analyze_p2_shape(p)) {
    for (const auto& t : p.tuples()) {
      std::size_t xi = 0;
      while (shape.family.at(t[xi]) != StripFamily::X) ++xi;
      Square sq{t[xi], t[(xi + 1) % 4], t[(xi + 2) % 4], t[(xi + 3) % 4]};
      by_xy.emplace(std::pair{sq.x, sq.y}, sq);
      by_vx.emplace(std::pair{sq.v, sq.x}, sq);
    }
  }

  const Square* square(const Label& x, const Label& y) const {
    auto it = by_xy.find({x, y});
    return it == by_xy.end() ? nullptr : &it->second;
  }
  const Square* corner_square(const Label& v, const Label& x) const {
    auto it = by_vx.find({v, x});
    return it == by_vx.end() ? nullptr : &it->second;
  }

  bool valid(const StripState& s) const {
    const auto& [xl, xr] = s.entering;
    const auto& [yu, yd] = s.leaving;
    return xl != xr && yu != yd && square(xl, yu) && square(xl, yd) && square(xr, yu) && square(xr, yd);
  }

  /// Next type-A vertex along the x-line for every admissible choice of the
  /// two new x letters, in letter order.
  std::vector<StripState> successors(const StripState& s) const {
    std::vector<StripState> out;
    const Label& xr = s.entering.second;
    const Label& v_top = square(xr, s.leaving.first)->v;
    const Label& v_bot = square(xr, s.leaving.second)->v;
    for (const auto& x_next : shape.x_letters) {
      if (x_next == xr) continue;
      const Square* top = corner_square(v_top, x_next);
      const Square* bot = corner_square(v_bot, x_next);
      if (!top || !bot || top->y == bot->y) continue;
      for (const auto& x_right : shape.x_letters) {
        if (x_right == x_next || !square(x_right, top->y) || !square(x_right, bot->y)) continue;
        StripState n;
        n.position = s.position + 2;
        n.entering = {x_next, x_right};
        n.leaving = {top->y, bot->y};
        n.x_letter = x_next;
        out.push_back(std::move(n));
      }
    }
    return out;
  }
};

std::optional<std::vector<StripState>> distinct_loop(const StripIndex& idx, const StripState& start) {
  std::vector<StripState> path{start};
  std::set<Label> used{start.entering.second};
  const std::size_t max_steps = idx.shape.x_letters.size() / 2;
  std::function<bool()> dfs = [&]() -> bool {
    if (path.size() - 1 >= max_steps) return false;
    for (auto& n : idx.successors(path.back())) {
      const Label& xn = n.entering.first;
      const Label& xr = n.entering.second;
      if (used.count(xn)) continue;
      if (n.same_configuration(start)) {
        path.push_back(n);
        return true;
      }
      if (xn == start.entering.first || used.count(xr) || xr == start.entering.first) continue;
      used.insert(xn);
      used.insert(xr);
      path.push_back(n);
      if (dfs()) return true;
      path.pop_back();
      used.erase(xn);
      used.erase(xr);
    }
    return false;
  };
  if (dfs()) return path;
  return std::nullopt;
}

RectangleRelator relator_from_path(const StripIndex& idx, std::span<const StripState> path, std::size_t steps) {
  const StripState& start = path.front();
  LinearWord u_word, w_word;
  std::vector<Tuple> squares, bottom;
  auto add_edge = [&](const Label& x, int sign, const StripState& at) {
    u_word.emplace_back(x, sign);
    w_word.emplace_back(idx.shape.x_to_u.at(x), -sign);
    squares.push_back(idx.square(x, at.leaving.first)->tuple());
    bottom.push_back(idx.square(x, at.leaving.second)->tuple());
  };
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    add_edge(path[i].entering.second, -1, path[i]);
    add_edge(path[i + 1].entering.first, 1, path[i + 1]);
  }
  squares.insert(squares.end(), bottom.begin(), bottom.end());
  const Label& y1 = start.leaving.first;
  const Label& y2 = start.leaving.second;
  LinearWord a = {SignedLetter(y2, -1), SignedLetter(y1, 1)};
  LinearWord b = inverse_word(w_word);
  CyclicWord boundary(concat({a, b, inverse_word(a), w_word}));
  return RectangleRelator{start, std::move(u_word), std::move(w_word), y1,  y2, std::move(boundary),
                          std::move(a), std::move(b), std::move(squares), steps};
}

}  // namespace

std::size_t pigeonhole_bound(const PolygonalPresentation& p) {
  auto shape = analyze_p2_shape(p);
  std::size_t n = shape.x_letters.size() * shape.y_letters.size();
  return n * n;
}

std::optional<StripState> find_start_state(const PolygonalPresentation& p) {
  StripIndex idx(p);
  const auto& xs = idx.shape.x_letters;
  const auto& ys = idx.shape.y_letters;
  for (const auto& xl : xs) {
    for (const auto& xr : xs) {
      for (const auto& yu : ys) {
        for (const auto& yd : ys) {
          StripState s;
          s.entering = {xl, xr};
          s.leaving = {yu, yd};
          s.x_letter = xl;
          if (idx.valid(s)) return s;
        }
      }
    }
  }
  return std::nullopt;
}

RectangleRelator find_rectangle(const PolygonalPresentation& p, const StripState& start) {
  StripIndex idx(p);
  if (!idx.valid(start)) {
    throw Error(ErrorCode::NoExtension, "start vertex (" + start.entering.first.str() + ", " +
                                            start.entering.second.str() + " | " + start.leaving.first.str() + ", " +
                                            start.leaving.second.str() + ") has no four surrounding squares");
  }
  StripState origin = start;
  origin.position = 0;
  if (auto loop = distinct_loop(idx, origin)) {
    return relator_from_path(idx, *loop, loop->back().position);
  }

  const std::size_t bound = pigeonhole_bound(p);
  std::vector<StripState> walk{origin};
  for (;;) {
    auto next = idx.successors(walk.back());
    if (next.empty()) {
      throw Error(ErrorCode::NoExtension, "strip cannot be extended past x-edge " + std::to_string(walk.back().position));
    }
    walk.push_back(next.front());
    const auto& last = walk.back();
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      if (walk[i].same_configuration(last)) {
        if (walk.size() - 1 > bound) {
          throw Error(ErrorCode::NoExtension, "repeat after " + std::to_string(walk.size() - 1) +
                                                  " vertices exceeds the pigeonhole bound");
        }
        std::vector<StripState> segment(walk.begin() + static_cast<std::ptrdiff_t>(i), walk.end());
        return relator_from_path(idx, segment, last.position);
      }
    }
    if (walk.size() > bound + 1) {
      throw Error(ErrorCode::NoExtension, "no repeat within the pigeonhole bound");
    }
  }
}

bool RectangleRelator::boundary_quadratic() const { return is_quadratic(boundary.letters()); }

bool RectangleRelator::commutator_shape() const {
  return CyclicWord(concat({a, b, inverse_word(a), inverse_word(b)})) == boundary;
}

Polyhedron rectangle_tessellation(const RectangleRelator& r) {
  const std::size_t s = r.s();
  auto lab = [](const char* base, std::size_t i) { return Label(base + std::to_string(i)); };
  std::vector<FacePolygon> faces;
  for (std::size_t i = 0; i < s; ++i) {
    std::size_t j = (i + 1) % s;
    faces.push_back({{SignedLetter(lab("h", i)), SignedLetter(lab("a", j)), SignedLetter(lab("t", i), -1),
                      SignedLetter(lab("a", i), -1)}});
  }
  for (std::size_t i = 0; i < s; ++i) {
    std::size_t j = (i + 1) % s;
    faces.push_back({{SignedLetter(lab("t", i)), SignedLetter(lab("d", j)), SignedLetter(lab("h", i), -1),
                      SignedLetter(lab("d", i), -1)}});
  }
  return Polyhedron::from_faces(std::move(faces));
}

// ---------------------------------------------------------------------------
// Explicit periodic planes

namespace {

SignedLetter letter(const char* base, std::size_t n, int sign = 1) {
  return SignedLetter(Label(base, static_cast<int>(n)), sign);
}

/// p^2 q^2 p^3 q^3 ... p^k q^k
LinearWord alternating(const char* p, const char* q, std::size_t from, std::size_t k) {
  LinearWord w;
  for (std::size_t n = from; n <= k; ++n) {
    w.push_back(letter(p, n));
    w.push_back(letter(q, n));
  }
  return w;
}

LinearWord renamed(std::span<const SignedLetter> w, const std::map<std::string, std::string>& names) {
  LinearWord out;
  for (const auto& l : w) out.emplace_back(Label(names.at(l.base.base), l.base.family), l.sign);
  return out;
}

}  // namespace

Theorem3Data theorem3_word(std::size_t k) {
  if (k < 3) throw Error(ErrorCode::BadParameter, "k must be at least 3");

  std::vector<FacePolygon> polygons;
  for (auto [p, q] : {std::pair{"xi", "yj"}, {"xi", "yt"}, {"xs", "yj"}, {"xs", "yt"}}) {
    polygons.push_back({alternating(p, q, 1, k)});
  }

  const LinearWord blocks[4] = {alternating("xi", "yj", 2, k), inverse_word(alternating("xi", "yt", 2, k)),
                                alternating("xs", "yt", 2, k), inverse_word(alternating("xs", "yj", 2, k))};
  LinearWord boundary = concat({blocks[0], blocks[1], blocks[2], blocks[3]});

  // Each block loses its end letters; the two letters meeting at a block
  // junction merge into one letter of U.
  const std::map<std::string, std::string> to_u = {{"xi", "ai"}, {"xs", "as"}, {"yj", "bj"}, {"yt", "bt"}};
  const SignedLetter junction_x = letter("ai", 2);
  const SignedLetter junction_y = letter("bj", k);
  LinearWord u;
  const SignedLetter junctions[4] = {junction_x, junction_y, junction_x.inverse(), junction_y.inverse()};
  for (std::size_t b = 0; b < 4; ++b) {
    u.push_back(junctions[b]);
    auto inner = std::span<const SignedLetter>(blocks[b]).subspan(1, blocks[b].size() - 2);
    auto named = renamed(inner, to_u);
    u.insert(u.end(), named.begin(), named.end());
  }

  Substitution phi;
  for (const auto& l : u) {
    if (l.base == junction_x.base || l.base == junction_y.base) continue;
    auto from = std::find_if(to_u.begin(), to_u.end(), [&](const auto& kv) { return kv.second == l.base.base; });
    phi.set(l.base, {SignedLetter(Label(from->first, l.base.family))});
  }
  phi.set(junction_x.base, {letter("xs", 2, -1), letter("xi", 2)});
  phi.set(junction_y.base, {letter("yj", k), letter("yt", k, -1)});

  std::vector<PiMultiple> angles;
  for (std::size_t b = 0; b < 4; ++b) {
    for (std::size_t i = 0; i + 1 < blocks[b].size(); ++i) angles.emplace_back(1, 2);
    angles.emplace_back(1);
  }

  WicksForm form{CyclicWord(u)};
  CyclicWord w(boundary);
  return Theorem3Data{k, std::move(polygons), std::move(boundary), std::move(w), std::move(form), std::move(phi),
                      std::move(angles)};
}

LinearWord theorem4_boundary(std::size_t m) {
  if (m < 2) throw Error(ErrorCode::BadParameter, "m must be at least 2");
  LinearWord w;
  for (std::size_t i = 1; i <= m; ++i) {
    std::size_t next = i % m + 1;
    w.push_back(letter("a", i));
    w.push_back(letter("b", i));
    w.push_back(letter("b", next, -1));
    w.push_back(letter("a", i, -1));
  }
  return w;
}

Theorem4Data theorem4_word(std::size_t m) {
  if (m != 3 && m != 4 && m != 6 && m != 8) throw Error(ErrorCode::BadParameter, "m must be 3, 4, 6 or 8");
  LinearWord boundary = theorem4_boundary(m);
  std::vector<FacePolygon> region;
  for (std::size_t i = 1; i <= m; ++i) {
    std::size_t next = i % m + 1;
    region.push_back({{letter("a", i), letter("b", i), letter("c", i), letter("d", i)}});
    region.push_back({{letter("a", i), letter("b", next), letter("c", i), letter("d", next)}});
  }
  std::vector<PiMultiple> angles;
  for (std::size_t i = 0; i < m; ++i) {
    const auto sm = static_cast<std::int64_t>(m);
    angles.insert(angles.end(), {PiMultiple(1, sm), PiMultiple(2, sm), PiMultiple(1, sm), PiMultiple(2, sm)});
  }
  WicksForm form{CyclicWord(boundary)};
  if (form.genus() != m - 1) {
    throw Error(ErrorCode::NotWicks, "genus " + std::to_string(form.genus()) + " for m = " + std::to_string(m));
  }
  return Theorem4Data{m, std::move(boundary), std::move(form), std::move(region), std::move(angles)};
}

}  // namespace polyhedra
