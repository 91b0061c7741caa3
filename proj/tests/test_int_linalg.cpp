#include <gtest/gtest.h>

#include <limits>

#include "generators.hpp"
#include "minfol/int_linalg.hpp"

using namespace minfol;

namespace {

// Leibniz expansion; fine for n <= 5.
Int leibniz_det(const IntMatrix& A) {
  const std::size_t n = A.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Int total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Int term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= A(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

std::vector<std::vector<Rational>> rational_rows(const IntMatrix& A) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < A.rows(); ++i) rows.emplace_back(A.row(i).begin(), A.row(i).end());
  return rows;
}

}  // namespace

TEST(CheckedArithmetic, OverflowThrows) {
  const Int big = std::numeric_limits<Int>::max();
  EXPECT_THROW(checked_add(big, 1), ArithmeticOverflow);
  EXPECT_THROW(checked_mul(big / 2 + 1, 2), ArithmeticOverflow);
  EXPECT_THROW(checked_neg(std::numeric_limits<Int>::min()), ArithmeticOverflow);
  EXPECT_EQ(checked_sub(-big, 1), std::numeric_limits<Int>::min());
}

TEST(CheckedArithmetic, FloorDivision) {
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_mod(-7, 2), 1);
  EXPECT_EQ(floor_div(7, -2), -4);
  EXPECT_EQ(floor_mod(7, -2), -1);
  EXPECT_EQ(floor_div(7, -2) * -2 + floor_mod(7, -2), 7);
  const auto e = extended_gcd(240, 46);
  EXPECT_EQ(e.g, 2);
  EXPECT_EQ(240 * e.x + 46 * e.y, 2);
}

TEST(RationalTest, NormalFormAndFrac) {
  EXPECT_EQ(Rational(2, -4), Rational(-1, 2));
  EXPECT_EQ(Rational(-1, 3).frac(), Rational(2, 3));
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_TRUE(Rational(1, 3) < Rational(1, 2));
  EXPECT_THROW(Rational(1, 0), DomainError);
}

TEST(Determinant, MatchesLeibnizExpansion) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
    const auto A = gen::int_matrix(rng, n, n, 4);
    ASSERT_EQ(determinant(A), leibniz_det(A)) << A;
  }
}

TEST(Rank, MatchesRationalElimination) {
  gen::Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const auto r = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    const auto c = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    auto A = gen::int_matrix(rng, r, c, 2);
    if (r > 1 && trial % 3 == 0)  // force dependencies
      for (std::size_t j = 0; j < c; ++j) A(r - 1, j) = A(0, j) * 2 - A(1 % r, j);
    ASSERT_EQ(rank(A), rational_rank(rational_rows(A))) << A;
  }
}

TEST(SmithNormalForm, Properties) {
  gen::Rng rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    const auto r = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    const auto c = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    const auto A = gen::int_matrix(rng, r, c, 5);
    const auto s = smith_normal_form(A);
    ASSERT_EQ(s.U * A * s.V, s.D) << A;
    ASSERT_EQ(s.V * s.V_inverse, IntMatrix::identity(c));
    ASSERT_EQ(std::abs(determinant(s.U)), 1);
    ASSERT_EQ(std::abs(determinant(s.V)), 1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) ASSERT_EQ(s.D(i, j), 0);
    const auto f = s.invariant_factors();
    ASSERT_EQ(f.size(), s.rank);
    ASSERT_EQ(s.rank, rank(A));
    for (std::size_t i = 0; i < f.size(); ++i) {
      ASSERT_GT(f[i], 0);
      if (i + 1 < f.size()) ASSERT_EQ(f[i + 1] % f[i], 0);
    }
    if (r == c) {
      Int prod = 1;
      for (Int x : f) prod *= x;
      ASSERT_EQ(s.rank == r ? prod : 0, std::abs(determinant(A)));
    }
  }
}

TEST(SmithNormalForm, KnownInvariants) {
  const IntMatrix A{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  EXPECT_EQ(smith_normal_form(A).invariant_factors(), (std::vector<Int>{2, 6, 12}));
}

TEST(KernelBasis, VectorsAreKernelAndPrimitive) {
  gen::Rng rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
    const auto c = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    const auto A = gen::int_matrix(rng, r, c, 3);
    const auto K = kernel_basis(A);
    ASSERT_EQ(K.size(), c - rank(A));
    for (const auto& v : K) {
      for (Int x : A.apply(v)) ASSERT_EQ(x, 0);
      Int g = 0;
      for (Int x : v) g = gcd(g, x);
      ASSERT_EQ(g, 1);
    }
    if (!K.empty()) {
      IntMatrix KM(K.size(), c);
      for (std::size_t i = 0; i < K.size(); ++i)
        for (std::size_t j = 0; j < c; ++j) KM(i, j) = K[i][j];
      ASSERT_EQ(rank(KM), K.size());
    }
  }
}
