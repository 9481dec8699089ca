#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyhedra/complex.hpp"
#include "polyhedra/presentation.hpp"
#include "polyhedra/wicks.hpp"
#include "polyhedra/word.hpp"

namespace polyhedra {

/// Angle num/den · π, kept in lowest terms with den > 0.
class PiMultiple {
 public:
  PiMultiple() = default;
  PiMultiple(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  std::string str() const;  // "pi/2", "2pi/3", "2pi", "0"

  friend PiMultiple operator+(PiMultiple a, PiMultiple b);
  friend PiMultiple operator*(std::int64_t n, PiMultiple a);
  friend bool operator==(const PiMultiple&, const PiMultiple&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

struct VertexAngles {
  std::size_t vertex = 0;
  std::size_t corners = 0;
  PiMultiple total;
};

struct AngleVerdict {
  bool ok = false;
  std::vector<VertexAngles> vertices;
  std::string diagnostic;
};

/// Every corner gets `corner_angle`; passes iff each vertex class of the
/// gluing sums to 2π. Throws NotQuadratic, BadParameter for angle <= 0.
AngleVerdict angle_sum_certificate(const CyclicWord& w, PiMultiple corner_angle);
AngleVerdict angle_sum_certificate(const Polyhedron& K, PiMultiple corner_angle);
/// corner_angles[i] is the angle between letters i and i + 1 (cyclically).
AngleVerdict angle_sum_certificate(std::span<const SignedLetter> w, std::span<const PiMultiple> corner_angles);

enum class StripFamily { X = 0, Y = 1, U = 2, V = 3 };

/// Family of every letter of a presentation whose tuples read x y u v.
struct P2Shape {
  std::map<Label, StripFamily> family;
  std::map<Label, Label> x_to_u;
  std::vector<Label> x_letters;
  std::vector<Label> y_letters;
};

/// Throws NotP2Shape unless all tuples have length 4, families can be
/// assigned consistently and u is a function of x.
P2Shape analyze_p2_shape(const PolygonalPresentation& p);

/// A vertex on the x-line with two entering x-edges (left, right) and two
/// leaving y-edges (up, down).
struct StripState {
  std::size_t position = 0;  // x-edges walked from the start
  std::pair<Label, Label> entering;
  std::pair<Label, Label> leaving;
  Label x_letter;  // last x-edge walked; entering.first

  /// Same local picture; position ignored.
  bool same_configuration(const StripState& o) const {
    return entering == o.entering && leaving == o.leaving;
  }
};

/// First state (in letter order) whose four squares exist; nullopt when the
/// link has no 4-cycle through x and y edges.
std::optional<StripState> find_start_state(const PolygonalPresentation& p);

/// (#x letters · #y letters)^2.
std::size_t pigeonhole_bound(const PolygonalPresentation& p);

struct RectangleRelator {
  StripState start;
  LinearWord U;  // x-edges between the repeats, read left to right
  LinearWord W;  // U with x -> u, signs flipped (top row of the rectangle)
  Label y1;      // leaving upward at the repeated vertex
  Label y2;      // leaving downward
  CyclicWord boundary;
  LinearWord a;  // y2' y1
  LinearWord b;  // W'
  std::vector<Tuple> squares;  // top row then bottom row, left to right
  std::size_t steps = 0;       // x-edges walked before the repeat closed

  std::size_t s() const { return U.size(); }
  bool boundary_quadratic() const;
  /// a b a' b' equals the boundary as cyclic words.
  bool commutator_shape() const;
};

/// Walks the strip from `start` until its configuration repeats. Prefers a
/// return to `start` along distinct x letters, else takes the first repeat
/// of the smallest-choice walk. Throws NotP2Shape, NoExtension.
RectangleRelator find_rectangle(const PolygonalPresentation& p, const StripState& start);

/// Torus tessellated by the 2s squares of the rectangle, edges labelled by
/// position (h: x-line, t: top = bottom, a: upper verticals, d: lower).
Polyhedron rectangle_tessellation(const RectangleRelator& r);

struct Theorem3Data {
  std::size_t k = 0;
  std::vector<FacePolygon> polygons;  // the four 2k-gons around the central vertex
  LinearWord boundary;                // W as written, before canonical rotation
  CyclicWord W;
  WicksForm U;
  Substitution substitution;
  std::vector<PiMultiple> corner_angles;  // along `boundary`
};

/// Throws BadParameter for k < 3.
Theorem3Data theorem3_word(std::size_t k);

struct Theorem4Data {
  std::size_t m = 0;
  LinearWord boundary;
  WicksForm W;
  std::vector<FacePolygon> region;  // 2m squares around the central vertex
  std::vector<PiMultiple> corner_angles;
};

/// a_1 b_1 b_2' a_1' ... a_m b_m b_1' a_m' for any m >= 2.
LinearWord theorem4_boundary(std::size_t m);
/// Throws BadParameter unless m is 3, 4, 6 or 8.
Theorem4Data theorem4_word(std::size_t m);

}  // namespace polyhedra
