#pragma once

// Hand-rolled random generators for property tests. Every test seeds its own
// engine, so failures reproduce.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "minfol/int_linalg.hpp"
#include "minfol/origami.hpp"
#include "minfol/permutation.hpp"
#include "minfol/sl2z.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline std::vector<minfol::sl2z::Token> token_word(Rng& rng, int max_len) {
  using minfol::sl2z::Token;
  const Token all[] = {Token::S, Token::T, Token::TInverse, Token::MinusI};
  std::vector<Token> w(static_cast<std::size_t>(uniform(rng, 0, max_len)));
  for (auto& t : w) t = all[uniform(rng, 0, 3)];
  return w;
}

inline minfol::sl2z::IntMatrix2 sl2z_matrix(Rng& rng, int max_len = 12) {
  return minfol::sl2z::word_product(token_word(rng, max_len));
}

// Hyperbolic matrix from a product of positive shears; trace >= 3.
inline minfol::sl2z::IntMatrix2 anosov_matrix(Rng& rng) {
  using M = minfol::sl2z::IntMatrix2;
  M m = M::identity();
  const int n = uniform(rng, 1, 3);
  for (int i = 0; i < n; ++i) {
    m = m * M{1, uniform(rng, 1, 3), 0, 1};
    m = m * M{1, 0, uniform(rng, 1, 3), 1};
  }
  return m;
}

inline minfol::Permutation permutation(Rng& rng, std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return minfol::Permutation(v);
}

// Rejection sampling of connected pairs.
inline minfol::origami::Origami origami(Rng& rng, std::size_t n) {
  for (;;) {
    auto h = permutation(rng, n), v = permutation(rng, n);
    std::vector<minfol::Permutation> gens{h, v};
    if (minfol::is_transitive(gens, n)) return minfol::origami::Origami(h, v);
  }
}

// Product of random elementary matrices: determinant one.
inline minfol::IntMatrix unimodular(Rng& rng, std::size_t n, int steps = 12) {
  auto m = minfol::IntMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 2));
    if (j >= i) ++j;
    const int c = uniform(rng, -2, 2);
    for (std::size_t k = 0; k < n; ++k) m(i, k) += c * m(j, k);
  }
  return m;
}

inline minfol::IntMatrix int_matrix(Rng& rng, std::size_t r, std::size_t c, int bound) {
  minfol::IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(rng, -bound, bound);
  return m;
}

}  // namespace gen
