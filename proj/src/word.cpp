#include "polyhedra/word.hpp"

#include <map>
#include <utility>

#include "polyhedra/cyclic.hpp"
#include "polyhedra/error.hpp"
#include "polyhedra/tableau.hpp"

namespace polyhedra {

LinearWord inverse_word(std::span<const SignedLetter> w) {
  LinearWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

LinearWord concat(std::initializer_list<std::span<const SignedLetter>> parts) {
  LinearWord out;
  for (auto p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

LinearWord parse_word(std::string_view text) {
  LinearWord out;
  for (auto tok : split_ws(text)) {
    int sign = 1;
    if (tok.back() == '\'') {
      sign = -1;
      tok.remove_suffix(1);
      if (!tok.empty() && tok.back() == '\'') throw Error(ErrorCode::Parse, "double apostrophe in word");
    }
    if (tok.empty()) throw Error(ErrorCode::Parse, "empty letter in word");
    out.emplace_back(parse_label(tok), sign);
  }
  if (out.empty()) throw Error(ErrorCode::Parse, "empty word");
  return out;
}

std::string format_word(std::span<const SignedLetter> w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += l.str();
  }
  return out;
}

bool is_quadratic(std::span<const SignedLetter> w) {
  std::map<Label, int> count;
  for (const auto& l : w) ++count[l.base];
  for (const auto& [_, c] : count) {
    if (c != 2) return false;
  }
  return true;
}

bool is_orientable_quadratic(std::span<const SignedLetter> w) {
  std::map<Label, std::pair<int, int>> count;
  for (const auto& l : w) {
    auto& c = count[l.base];
    (l.sign > 0 ? c.first : c.second)++;
  }
  for (const auto& [_, c] : count) {
    if (c.first != 1 || c.second != 1) return false;
  }
  return true;
}

CyclicWord::CyclicWord(std::span<const SignedLetter> letters) {
  if (letters.empty()) throw Error(ErrorCode::BadParameter, "cyclic word must be nonempty");
  letters_ = canonical_rotation(letters);
}

}  // namespace polyhedra
