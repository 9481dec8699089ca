#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "polyhedra/bigraph.hpp"
#include "polyhedra/label.hpp"

namespace polyhedra {

using Tuple = std::vector<Label>;

/// Set of cyclic k-tuples over the black letters P of `graphs`, with a basic
/// bijection λ: P -> Q (blacks to whites). Each cyclic tuple is stored once,
/// as its least rotation.
class PolygonalPresentation {
 public:
  PolygonalPresentation() = default;
  PolygonalPresentation(std::vector<BipartiteGraph> graphs, std::map<Label, Label> lambda, std::size_t k);

  /// Stores the canonical rotation; throws BadParameter if the length is not k.
  void add_tuple(std::span<const Label> tuple);

  const std::vector<BipartiteGraph>& graphs() const { return graphs_; }
  const std::map<Label, Label>& lambda() const { return lambda_; }
  const std::set<Tuple>& tuples() const { return tuples_; }
  std::size_t k() const { return k_; }

  /// Digon faces (k <= 2): legal, but no curvature condition can hold.
  bool degenerate() const { return k_ <= 2; }

  /// All black labels, i.e. the alphabet P.
  std::set<Label> letters() const;
  /// Index of the graph with black vertex `l`, if any.
  std::optional<std::size_t> graph_of_black(const Label& l) const;
  std::optional<std::size_t> graph_of_white(const Label& l) const;

  friend bool operator==(const PolygonalPresentation&, const PolygonalPresentation&) = default;

 private:
  std::vector<BipartiteGraph> graphs_;
  std::map<Label, Label> lambda_;
  std::set<Tuple> tuples_;
  std::size_t k_ = 0;
};

enum class Axiom { Lambda, Closure, Incidence, UniqueExtension };

const char* to_string(Axiom a);

struct AxiomViolation {
  Axiom axiom;
  Label first;
  Label second;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
  bool violates(Axiom a) const;
};

/// Checks λ is a bijection P -> Q and conditions (1)-(3). Throws UnknownLabel
/// if a tuple letter is not a black vertex of some graph.
AxiomReport verify_axioms(const PolygonalPresentation& p);

/// Builds the presentation for k compatible graph sets: whites of set i become
/// x_m^i (aligned by the compatibility bijections), blacks y_l^i, and every edge
/// of set 1 yields the cyclic word (x_m^1, y^1, x_m^2, y^2, ..., x_m^k, y^k).
/// The graph list holds the relabelled sets followed by their dual families.
/// Throws IncompatibleSets.
PolygonalPresentation construct_theorem1(std::span<const GraphSet> sets,
                                         std::optional<std::uint64_t> seed = std::nullopt);

struct TupleCount {
  std::size_t cyclic_classes = 0;
  std::size_t linear_tuples = 0;
};

TupleCount tuple_count(const PolygonalPresentation& p);

}  // namespace polyhedra
