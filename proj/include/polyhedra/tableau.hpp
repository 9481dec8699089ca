#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "polyhedra/bigraph.hpp"

namespace polyhedra {

// Incidence tableau text:
//
//   # comment
//   graph K2_2
//   y1: x1 x2
//   y2: x1 x2
//
// One line per white vertex listing its black neighbours (repeats give
// parallel edges). Blacks are ordered by first appearance. A file may hold
// several graphs, each starting with its own `graph` header.

std::vector<BipartiteGraph> parse_tableaux(std::string_view text);
/// Exactly one graph expected.
BipartiteGraph parse_tableau(std::string_view text);

std::string format_tableau(const BipartiteGraph& g);
std::string format_tableaux(const std::vector<BipartiteGraph>& graphs);

std::string read_text_file(const std::filesystem::path& path);
std::vector<BipartiteGraph> load_tableau_file(const std::filesystem::path& path);

/// Whitespace tokenizer shared by the text formats.
std::vector<std::string_view> split_ws(std::string_view line);
std::string_view trim(std::string_view s);

}  // namespace polyhedra
