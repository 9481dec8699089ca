#include "polyhedra/presentation.hpp"

#include <algorithm>

#include "polyhedra/cyclic.hpp"
#include "polyhedra/error.hpp"
#include "polyhedra/shuffle.hpp"

namespace polyhedra {

PolygonalPresentation::PolygonalPresentation(std::vector<BipartiteGraph> graphs, std::map<Label, Label> lambda,
                                             std::size_t k)
    : graphs_(std::move(graphs)), lambda_(std::move(lambda)), k_(k) {}

void PolygonalPresentation::add_tuple(std::span<const Label> tuple) {
  if (tuple.size() != k_ || k_ == 0) {
    throw Error(ErrorCode::BadParameter,
                "tuple of length " + std::to_string(tuple.size()) + " in a presentation with k = " + std::to_string(k_));
  }
  tuples_.insert(canonical_rotation(tuple));
}

std::set<Label> PolygonalPresentation::letters() const {
  std::set<Label> out;
  for (const auto& g : graphs_) out.insert(g.blacks().begin(), g.blacks().end());
  return out;
}

std::optional<std::size_t> PolygonalPresentation::graph_of_black(const Label& l) const {
  for (std::size_t i = 0; i < graphs_.size(); ++i) {
    if (graphs_[i].find_black(l)) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> PolygonalPresentation::graph_of_white(const Label& l) const {
  for (std::size_t i = 0; i < graphs_.size(); ++i) {
    if (graphs_[i].find_white(l)) return i;
  }
  return std::nullopt;
}

const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::Lambda: return "basic bijection";
    case Axiom::Closure: return "axiom (1) cyclic closure";
    case Axiom::Incidence: return "axiom (2) incidence";
    case Axiom::UniqueExtension: return "axiom (3) unique extension";
  }
  return "axiom";
}

bool AxiomReport::violates(Axiom a) const {
  return std::any_of(violations.begin(), violations.end(), [a](const AxiomViolation& v) { return v.axiom == a; });
}

AxiomReport verify_axioms(const PolygonalPresentation& p) {
  AxiomReport report;
  auto add = [&](Axiom a, Label x, Label y, std::string detail) {
    report.violations.push_back({a, std::move(x), std::move(y), std::move(detail)});
  };

  // Which graph owns each black / white label. Parts of different graphs are
  // meant to be disjoint; a repeat is reported against λ.
  std::map<Label, std::size_t> black_owner, white_owner;
  for (std::size_t i = 0; i < p.graphs().size(); ++i) {
    for (const auto& b : p.graphs()[i].blacks()) {
      if (!black_owner.emplace(b, i).second) add(Axiom::Lambda, b, b, "black vertex shared by two graphs");
    }
    for (const auto& w : p.graphs()[i].whites()) {
      if (!white_owner.emplace(w, i).second) add(Axiom::Lambda, w, w, "white vertex shared by two graphs");
    }
  }

  std::map<Label, Label> preimage;
  for (const auto& [x, y] : p.lambda()) {
    if (!black_owner.count(x)) add(Axiom::Lambda, x, y, "λ defined outside P");
    if (!white_owner.count(y)) add(Axiom::Lambda, x, y, "λ value outside Q");
    auto [it, fresh] = preimage.emplace(y, x);
    if (!fresh) add(Axiom::Lambda, it->second, x, "λ not injective, both map to " + y.str());
  }
  for (const auto& [x, _] : black_owner) {
    if (!p.lambda().count(x)) add(Axiom::Lambda, x, x, "λ undefined");
  }
  for (const auto& [y, _] : white_owner) {
    if (!preimage.count(y)) add(Axiom::Lambda, y, y, "white vertex not in the image of λ");
  }

  for (const auto& t : p.tuples()) {
    for (const auto& l : t) {
      if (!black_owner.count(l)) throw Error(ErrorCode::UnknownLabel, l.str() + " is not a black vertex");
    }
  }

  std::map<Label, std::set<Label>> followers;
  std::map<std::pair<Label, Label>, std::set<Label>> thirds;
  for (const auto& t : p.tuples()) {
    if (t != canonical_rotation(std::span<const Label>(t))) add(Axiom::Closure, t.front(), t.back(), "non-canonical storage");
    const std::size_t k = t.size();
    for (std::size_t r = 0; r < k; ++r) {
      auto rotated = rotate_to(std::span<const Label>(t), r);
      if (!p.tuples().count(canonical_rotation(std::span<const Label>(rotated)))) {
        add(Axiom::Closure, t[r], t[(r + 1) % k], "rotation is not a member");
      }
      const Label& a = t[r];
      const Label& b = t[(r + 1) % k];
      followers[a].insert(b);
      if (k >= 3) thirds[{a, b}].insert(t[(r + 2) % k]);
    }
  }

  for (const auto& [x1, owner] : black_owner) {
    auto lam = p.lambda().find(x1);
    if (lam == p.lambda().end()) continue;
    std::set<Label> incident;
    auto g_idx = white_owner.find(lam->second);
    if (g_idx != white_owner.end()) {
      const auto& g = p.graphs()[g_idx->second];
      auto w = g.find_white(lam->second);
      for (std::size_t b : g.black_neighbors(*w)) incident.insert(g.blacks()[b]);
    }
    const auto& seen = followers[x1];
    for (const auto& x2 : incident) {
      if (!seen.count(x2)) {
        add(Axiom::Incidence, x1, x2, "λ(" + x1.str() + ") is incident to " + x2.str() + " but no tuple starts " +
                                          x1.str() + " " + x2.str());
      }
    }
    for (const auto& x2 : seen) {
      if (!incident.count(x2)) {
        add(Axiom::Incidence, x1, x2, "a tuple starts " + x1.str() + " " + x2.str() + " but " + x2.str() +
                                          " is not incident to λ(" + x1.str() + ")");
      }
    }
  }

  for (const auto& [prefix, ext] : thirds) {
    if (ext.size() > 1) {
      std::string list;
      for (const auto& l : ext) list += " " + l.str();
      add(Axiom::UniqueExtension, prefix.first, prefix.second, "prefix extends to" + list);
    }
  }
  return report;
}

PolygonalPresentation construct_theorem1(std::span<const GraphSet> sets, std::optional<std::uint64_t> seed) {
  if (sets.empty()) throw Error(ErrorCode::IncompatibleSets, "need at least one graph set");
  auto compat = are_compatible(sets, seed);
  if (!compat.compatible) throw Error(ErrorCode::IncompatibleSets, compat.reason);

  const std::size_t k = sets.size();
  const std::size_t n = compat.aligned[0].size();
  auto x_label = [](std::size_t m, std::size_t family) {
    return Label("x" + std::to_string(m + 1), static_cast<int>(family + 1));
  };

  // Relabelled graphs of every set, and the index m of each white.
  std::vector<std::vector<BipartiteGraph>> relabelled(k);
  std::vector<std::vector<std::vector<std::size_t>>> white_index(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& graphs = sets[i].graphs();
    white_index[i].resize(graphs.size());
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) white_index[i][gi].resize(graphs[gi].white_count());
    for (std::size_t m = 0; m < n; ++m) {
      auto ref = compat.aligned[i][m];
      white_index[i][ref.graph][ref.white] = m;
    }
    std::size_t next_black = 0;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      const auto& g = graphs[gi];
      std::vector<Label> whites, blacks;
      for (std::size_t w = 0; w < g.white_count(); ++w) whites.push_back(x_label(white_index[i][gi][w], i));
      for (std::size_t b = 0; b < g.black_count(); ++b) {
        blacks.emplace_back("y" + std::to_string(++next_black), static_cast<int>(i + 1));
      }
      relabelled[i].emplace_back("G" + std::to_string(i + 1) + "_" + g.name(), std::move(whites), std::move(blacks),
                                 g.edges());
    }
  }

  // incident[i][m]: blacks of set i adjacent to x_m^i, with multiplicity.
  std::vector<std::vector<std::vector<Label>>> incident(k, std::vector<std::vector<Label>>(n));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t m = 0; m < n; ++m) {
      auto ref = compat.aligned[i][m];
      const auto& g = relabelled[i][ref.graph];
      for (std::size_t b : g.black_neighbors(ref.white)) incident[i][m].push_back(g.blacks()[b]);
      std::sort(incident[i][m].begin(), incident[i][m].end());
    }
  }
  if (seed) {
    // β_j choice; set 1 keeps its sorted order as the reference.
    Shuffler shuffler(*seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t i = 1; i < k; ++i) {
      for (auto& list : incident[i]) shuffler.shuffle(list.begin(), list.end());
    }
  }

  std::vector<BipartiteGraph> graphs;
  std::map<Label, Label> lambda;
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& g : relabelled[i]) graphs.push_back(g);
  }
  // Dual family: whites y_l^i, blacks x_m^{i+1} (cyclically), so that the
  // pair (y^i, x^{i+1}) read in a tuple is an incidence of the dual graph.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t gi = 0; gi < relabelled[i].size(); ++gi) {
      BipartiteGraph d = dual(relabelled[i][gi]);
      std::vector<Label> blacks;
      for (std::size_t w = 0; w < d.black_count(); ++w) blacks.push_back(x_label(white_index[i][gi][w], (i + 1) % k));
      graphs.emplace_back("H" + std::to_string(i + 1) + "_" + sets[i].graphs()[gi].name(), d.whites(),
                          std::move(blacks), d.edges());
    }
  }
  for (const auto& g : graphs) {
    for (const auto& b : g.blacks()) lambda.emplace(b, b);
  }

  PolygonalPresentation p(std::move(graphs), std::move(lambda), 2 * k);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t pos = 0; pos < incident[0][m].size(); ++pos) {
      Tuple t;
      for (std::size_t i = 0; i < k; ++i) {
        t.push_back(x_label(m, i));
        t.push_back(incident[i][m][pos]);
      }
      p.add_tuple(t);
    }
  }
  return p;
}

TupleCount tuple_count(const PolygonalPresentation& p) {
  TupleCount c;
  c.cyclic_classes = p.tuples().size();
  for (const auto& t : p.tuples()) c.linear_tuples += rotation_period(std::span<const Label>(t));
  return c;
}

}  // namespace polyhedra
