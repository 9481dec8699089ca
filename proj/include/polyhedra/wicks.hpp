#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyhedra/word.hpp"

namespace polyhedra {

struct WicksVerdict {
  bool valid = false;
  int condition = 0;  // 1, 2 or 3 when invalid
  std::size_t position = 0;
  std::string message;
};

/// (i) each letter occurs exactly once with each sign; (ii) no cyclic factor
/// a a' or a' a; (iii) no two cyclic factors x y and y' x'. Positions refer
/// to the canonical rotation.
WicksVerdict is_wicks_form(const CyclicWord& w);

struct EulerData {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t genus = 0;
};

/// Glues the word's polygon and reads v, e = length / 2 and
/// g = (1 - v + e) / 2. Throws NotWicks.
EulerData euler_data(const CyclicWord& w);
std::size_t genus(const CyclicWord& w);

/// 4g <= length <= 6(2g - 1).
bool within_length_bounds(std::size_t genus, std::size_t length);

class WicksForm {
 public:
  /// Throws NotWicks.
  explicit WicksForm(CyclicWord word);

  const CyclicWord& word() const { return word_; }
  std::size_t genus() const { return genus_; }
  std::size_t length() const { return word_.size(); }

 private:
  CyclicWord word_;
  std::size_t genus_ = 0;
};

/// Letter -> nonempty word, extended to inverses by formal inversion.
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::map<Label, LinearWord> mapping);

  void set(const Label& letter, LinearWord image);
  /// Throws IncompleteSubstitution.
  LinearWord image(const SignedLetter& l) const;
  const std::map<Label, LinearWord>& mapping() const { return mapping_; }

  static Substitution identity_on(const CyclicWord& w);

 private:
  std::map<Label, LinearWord> mapping_;
};

struct SubstitutionVerdict {
  bool ok = false;
  std::optional<std::size_t> position;
  std::string message;
};

/// No image reduces internally and no junction Φ(u_i)Φ(u_{i+1}) cancels,
/// including the wrap-around junction. Throws IncompleteSubstitution.
SubstitutionVerdict is_non_cancelling(const Substitution& phi, const CyclicWord& u);

/// Throws CancellingSubstitution.
CyclicWord apply(const Substitution& phi, const CyclicWord& u);

/// Invariant of the word up to rotation, renaming and per-letter inversion:
/// letters numbered by first appearance, first occurrence positive, least
/// over rotations.
std::vector<int> isomorphism_key(const CyclicWord& w);

/// All Wicks forms of length <= max_length (even, at most 14), one per
/// isomorphism class, letters named a, b, c, ...; sorted by length, genus, key.
std::vector<WicksForm> enumerate_wicks(std::size_t max_length);

}  // namespace polyhedra
