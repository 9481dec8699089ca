#pragma once

#include <cstdint>
#include <iterator>
#include <random>
#include <utility>

namespace polyhedra {

// mt19937_64 output is fixed by the standard; std::shuffle and the
// distributions are not, so the Fisher-Yates step is done by hand.
class Shuffler {
 public:
  explicit Shuffler(std::uint64_t seed) : rng_(seed) {}

  template <class It>
  void shuffle(It first, It last) {
    auto n = static_cast<std::uint64_t>(std::distance(first, last));
    for (std::uint64_t i = n; i > 1; --i) {
      std::uint64_t j = rng_() % i;
      using std::swap;
      swap(*(first + static_cast<std::ptrdiff_t>(i - 1)), *(first + static_cast<std::ptrdiff_t>(j)));
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace polyhedra
