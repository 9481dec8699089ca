#pragma once

#include <cstddef>
#include <string>

#include "polyhedra/bigraph.hpp"

// Standard small graphs. Whites are y1.., blacks x1.., as in the incidence
// tableau `y1: x1 x2`.
namespace polyhedra::catalog {

/// K_{whites,blacks}; every white is joined to every black.
BipartiteGraph complete_bipartite(std::size_t whites, std::size_t blacks);

/// Cycle with 2m edges and alternating colours (m >= 2).
BipartiteGraph even_cycle(std::size_t m);

/// Incidence graph of the Fano plane: lines y_i = {x_i, x_{i+1}, x_{i+3}} mod 7.
BipartiteGraph heawood();

/// Path white y1 - black x1 - white y2 - ... with `edges` edges.
BipartiteGraph path(std::size_t edges);

}  // namespace polyhedra::catalog
