#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace polyhedra {

/// Start index of the lexicographically least rotation (Booth's algorithm).
/// Requires only operator< and operator== on T. O(n).
template <class T>
std::size_t least_rotation(std::span<const T> s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<long> fail(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const T& sj = s[j % n];
    long i = fail[j - k - 1];
    while (i != -1 && !(sj == s[(k + i + 1) % n])) {
      if (sj < s[(k + i + 1) % n]) k = j - i - 1;
      i = fail[i];
    }
    if (!(sj == s[(k + i + 1) % n])) {
      // i == -1 here
      if (sj < s[k % n]) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return k % n;
}

template <class T>
std::vector<T> rotate_to(std::span<const T> s, std::size_t start) {
  std::vector<T> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s[(start + i) % s.size()]);
  return out;
}

template <class T>
std::vector<T> canonical_rotation(std::span<const T> s) {
  return rotate_to(s, least_rotation(s));
}

/// Smallest p > 0 with s rotated by p equal to s (s.size() when aperiodic).
template <class T>
std::size_t rotation_period(std::span<const T> s) {
  const std::size_t n = s.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i) same = s[i] == s[(i + p) % n];
    if (same) return p;
  }
  return n;
}

}  // namespace polyhedra
