#include "polyhedra/wicks.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <tuple>

#include "polyhedra/complex.hpp"
#include "polyhedra/error.hpp"

namespace polyhedra {

WicksVerdict is_wicks_form(const CyclicWord& w) {
  const auto& s = w.letters();
  const std::size_t n = s.size();
  auto fail = [](int cond, std::size_t pos, const std::string& why) {
    static const char* names[] = {"", "(i)", "(ii)", "(iii)"};
    return WicksVerdict{false, cond, pos,
                        std::string("condition ") + names[cond] + " violated at position " + std::to_string(pos) + ": " +
                            why};
  };

  std::map<Label, std::pair<int, int>> count;
  for (const auto& l : s) {
    auto& c = count[l.base];
    (l.sign > 0 ? c.first : c.second)++;
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto c = count[s[i].base];
    if (c.first != 1 || c.second != 1) {
      return fail(1, i, s[i].base.str() + " occurs " + std::to_string(c.first) + " time(s) positively and " +
                            std::to_string(c.second) + " inverted");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i + 1] == w[i].inverse()) return fail(2, i, "cancelling factor " + w[i].str() + " " + w[i + 1].str());
  }
  std::set<std::pair<SignedLetter, SignedLetter>> factors;
  for (std::size_t i = 0; i < n; ++i) factors.emplace(w[i], w[i + 1]);
  for (std::size_t i = 0; i < n; ++i) {
    if (factors.count({w[i + 1].inverse(), w[i].inverse()})) {
      return fail(3, i, "factors " + w[i].str() + " " + w[i + 1].str() + " and " + w[i + 1].inverse().str() + " " +
                            w[i].inverse().str() + " both occur");
    }
  }
  return {true, 0, 0, "valid Wicks form"};
}

EulerData euler_data(const CyclicWord& w) {
  auto verdict = is_wicks_form(w);
  if (!verdict.valid) throw Error(ErrorCode::NotWicks, verdict.message);
  auto K = build_from_word(w);
  EulerData d;
  d.vertices = K.vertex_count();
  d.edges = w.size() / 2;
  std::size_t twice = 1 + d.edges - d.vertices;
  if (1 + d.edges < d.vertices || twice % 2 != 0) {
    throw Error(ErrorCode::NotWicks, "non-integral genus for " + w.str());
  }
  d.genus = twice / 2;
  return d;
}

std::size_t genus(const CyclicWord& w) { return euler_data(w).genus; }

bool within_length_bounds(std::size_t g, std::size_t length) {
  return g >= 1 && 4 * g <= length && length <= 6 * (2 * g - 1);
}

WicksForm::WicksForm(CyclicWord word) : word_(std::move(word)), genus_(polyhedra::genus(word_)) {}

Substitution::Substitution(std::map<Label, LinearWord> mapping) {
  for (auto& [k, v] : mapping) set(k, std::move(v));
}

void Substitution::set(const Label& letter, LinearWord image) {
  if (image.empty()) throw Error(ErrorCode::BadParameter, "empty image for " + letter.str());
  mapping_[letter] = std::move(image);
}

LinearWord Substitution::image(const SignedLetter& l) const {
  auto it = mapping_.find(l.base);
  if (it == mapping_.end()) throw Error(ErrorCode::IncompleteSubstitution, "no image for " + l.base.str());
  return l.sign > 0 ? it->second : inverse_word(it->second);
}

Substitution Substitution::identity_on(const CyclicWord& w) {
  Substitution phi;
  for (const auto& l : w.letters()) phi.set(l.base, {SignedLetter(l.base, 1)});
  return phi;
}

SubstitutionVerdict is_non_cancelling(const Substitution& phi, const CyclicWord& u) {
  const std::size_t n = u.size();
  std::vector<LinearWord> images;
  images.reserve(n);
  for (const auto& l : u.letters()) images.push_back(phi.image(l));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& img = images[i];
    for (std::size_t j = 0; j + 1 < img.size(); ++j) {
      if (img[j + 1] == img[j].inverse()) {
        return {false, i, "image of " + u[i].str() + " is not reduced"};
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& last = images[i].back();
    const auto& first = images[(i + 1) % n].front();
    if (first == last.inverse()) {
      return {false, i, "cancellation between images of " + u[i].str() + " and " + u[i + 1].str() + " (" +
                            last.str() + " " + first.str() + ")"};
    }
  }
  return {true, std::nullopt, "non-cancelling"};
}

CyclicWord apply(const Substitution& phi, const CyclicWord& u) {
  auto verdict = is_non_cancelling(phi, u);
  if (!verdict.ok) throw Error(ErrorCode::CancellingSubstitution, verdict.message);
  LinearWord out;
  for (const auto& l : u.letters()) {
    auto img = phi.image(l);
    out.insert(out.end(), img.begin(), img.end());
  }
  return CyclicWord(out);
}

namespace {

std::vector<int> normalized_from(const LinearWord& s, std::size_t start) {
  std::map<Label, std::pair<int, int>> seen;  // base -> (id, sign of first occurrence)
  std::vector<int> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& l = s[(start + i) % s.size()];
    auto it = seen.find(l.base);
    if (it == seen.end()) it = seen.emplace(l.base, std::pair<int, int>{static_cast<int>(seen.size()) + 1, l.sign}).first;
    out.push_back(it->second.first * l.sign * it->second.second);
  }
  return out;
}

Label enumeration_letter(int id) { return Label(std::string(1, static_cast<char>('a' + id - 1))); }

}  // namespace

std::vector<int> isomorphism_key(const CyclicWord& w) {
  std::vector<int> best;
  for (std::size_t r = 0; r < w.size(); ++r) {
    auto cand = normalized_from(w.letters(), r);
    if (best.empty() || cand < best) best = std::move(cand);
  }
  return best;
}

std::vector<WicksForm> enumerate_wicks(std::size_t max_length) {
  if (max_length % 2 != 0 || max_length > 14) {
    throw Error(ErrorCode::BadParameter, "max_length must be even and at most 14");
  }
  std::vector<std::tuple<std::size_t, std::size_t, std::vector<int>, WicksForm>> found;
  for (std::size_t length = 2; length <= max_length; length += 2) {
    const int letters = static_cast<int>(length / 2);
    std::set<std::vector<int>> keys;
    std::vector<int> word;
    std::vector<int> open;  // ids seen once
    // Up to renaming and per-letter inversion, a word is a perfect matching of
    // positions: first occurrence positive, second inverted, ids in order.
    std::function<void(int)> grow = [&](int next_id) {
      if (word.size() == length) {
        LinearWord lw;
        for (int v : word) lw.emplace_back(enumeration_letter(std::abs(v)), v > 0 ? 1 : -1);
        CyclicWord cw(lw);
        if (!is_wicks_form(cw).valid) return;
        auto key = isomorphism_key(cw);
        if (!keys.insert(key).second) return;
        LinearWord named;
        for (int v : key) named.emplace_back(enumeration_letter(std::abs(v)), v > 0 ? 1 : -1);
        WicksForm form{CyclicWord(named)};
        found.emplace_back(length, form.genus(), std::move(key), std::move(form));
        return;
      }
      if (next_id <= letters) {
        word.push_back(next_id);
        open.push_back(next_id);
        grow(next_id + 1);
        open.pop_back();
        word.pop_back();
      }
      for (std::size_t i = 0; i < open.size(); ++i) {
        int id = open[i];
        word.push_back(-id);
        open.erase(open.begin() + static_cast<std::ptrdiff_t>(i));
        grow(next_id);
        open.insert(open.begin() + static_cast<std::ptrdiff_t>(i), id);
        word.pop_back();
      }
    };
    grow(1);
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) <
           std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b));
  });
  std::vector<WicksForm> out;
  for (auto& f : found) out.push_back(std::move(std::get<3>(f)));
  return out;
}

}  // namespace polyhedra
