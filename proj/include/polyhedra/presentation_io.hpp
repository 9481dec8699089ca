#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "polyhedra/presentation.hpp"

namespace polyhedra {

// Presentation text:
//
//   k 4
//   graphs
//   p2.graphs.tab          <- tableau file, relative to this file
//   graph G1_K2_2          <- or an inline tableau block
//   x1^1: y1^1 y2^1
//   lambda
//   x1^1 -> x1^1
//   tuples
//   x1^1 y1^1 x1^2 y1^2
//
// Graph order is: referenced files (in listed order), then inline blocks.
// The emitter writes λ sorted by key and tuples in canonical order, so
// emitting a parsed canonical file reproduces it byte for byte.

struct PresentationFile {
  PolygonalPresentation presentation;
  std::vector<std::string> graph_refs;
  std::size_t referenced_graph_count = 0;  // leading graphs that came from refs
};

PresentationFile parse_presentation(std::string_view text, const std::filesystem::path& base_dir = ".");
PresentationFile load_presentation(const std::filesystem::path& path);

/// Graphs are written inline.
std::string format_presentation(const PolygonalPresentation& p);
std::string format_presentation(const PresentationFile& f);

}  // namespace polyhedra
