#ifndef ZWDIAG_TESTS_SUPPORT_HPP
#define ZWDIAG_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <random>

#include "zwdiag/matrix.hpp"

namespace zwdiag::testing {

inline BinarySymmetricMatrix M(std::string_view text) { return BinarySymmetricMatrix::parse_compact(text); }

inline ZWMatrix P(std::string_view z, std::string_view w) { return ZWMatrix(M(z), M(w)); }

/// Fixed seed so that failures reproduce.
inline std::mt19937_64 &rng()
{
  static std::mt19937_64 engine(0x5eed2024u);
  return engine;
}

inline int random_n(int lo = kMinVertices, int hi = kMaxVertices)
{
  return std::uniform_int_distribution<int>(lo, hi)(rng());
}

/// Mixes sparse, medium and dense matrices so that structured patterns
/// (cliques, isolated strokes) show up often enough to matter.
inline BinarySymmetricMatrix random_matrix(int n)
{
  static constexpr double densities[] = {0.15, 0.5, 0.85};
  std::bernoulli_distribution stroke(densities[std::uniform_int_distribution<int>(0, 2)(rng())]);
  std::bernoulli_distribution circle(densities[std::uniform_int_distribution<int>(0, 2)(rng())]);
  BinarySymmetricMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    m.set_circle(i, circle(rng()));
    for (int j = i + 1; j <= n; ++j)
      m.set_stroke(i, j, stroke(rng()));
  }
  return m;
}

inline ZWMatrix random_pair(int n) { return ZWMatrix(random_matrix(n), random_matrix(n)); }

inline Permutation random_permutation(int n)
{
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng());
  return Permutation(std::move(images));
}

} // namespace zwdiag::testing

#endif
