#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyhedra/label.hpp"

namespace polyhedra {

struct SignedLetter {
  Label base;
  int sign = 1;  // +1 or -1

  SignedLetter() = default;
  SignedLetter(Label b, int s = 1) : base(std::move(b)), sign(s) {}

  SignedLetter inverse() const { return {base, -sign}; }
  std::string str() const { return sign > 0 ? base.str() : base.str() + "'"; }

  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
  // Same base: positive before inverse.
  friend std::strong_ordering operator<=>(const SignedLetter& a, const SignedLetter& b) {
    if (auto c = a.base <=> b.base; c != 0) return c;
    return b.sign <=> a.sign;
  }
};

using LinearWord = std::vector<SignedLetter>;

/// Formal inverse: reversed, every letter inverted.
LinearWord inverse_word(std::span<const SignedLetter> w);
LinearWord concat(std::initializer_list<std::span<const SignedLetter>> parts);

/// `a b a' b'`; a trailing apostrophe marks the inverse, `x^2'` carries a family index.
LinearWord parse_word(std::string_view text);
std::string format_word(std::span<const SignedLetter> w);

/// Every base occurs exactly twice, signs ignored.
bool is_quadratic(std::span<const SignedLetter> w);
/// Every base occurs exactly once with each sign.
bool is_orientable_quadratic(std::span<const SignedLetter> w);

/// Cyclic word stored as its lexicographically least rotation, so equality
/// is rotation invariant. Never empty.
class CyclicWord {
 public:
  explicit CyclicWord(std::span<const SignedLetter> letters);
  static CyclicWord parse(std::string_view text) { return CyclicWord(parse_word(text)); }

  const LinearWord& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  const SignedLetter& operator[](std::size_t i) const { return letters_[i % letters_.size()]; }
  CyclicWord inverse() const { return CyclicWord(inverse_word(letters_)); }
  std::string str() const { return format_word(letters_); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord& a, const CyclicWord& b) { return a.letters_ <=> b.letters_; }

 private:
  LinearWord letters_;
};

}  // namespace polyhedra
