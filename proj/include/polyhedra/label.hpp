#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace polyhedra {

/// Vertex or letter name: a token with an optional family index, written `base^i`.
///
/// Labels are totally ordered by family index first (absent sorts before any
/// index), then by base. Cyclic words use this order to pick their canonical
/// rotation.
struct Label {
  std::string base;
  std::optional<int> family;

  Label() = default;
  explicit Label(std::string b, std::optional<int> f = std::nullopt)
      : base(std::move(b)), family(f) {}

  std::string str() const;

  friend bool operator==(const Label&, const Label&) = default;
  friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
    if (auto c = a.family <=> b.family; c != 0) return c;
    return a.base <=> b.base;
  }
};

/// Parses `base` or `base^i`; base must match [A-Za-z0-9_]+.
Label parse_label(std::string_view token);

bool is_token(std::string_view s);

inline std::ostream& operator<<(std::ostream& os, const Label& l) { return os << l.str(); }

}  // namespace polyhedra
