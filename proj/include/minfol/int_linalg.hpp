#pragma once

// Exact integer and rational linear algebra for the small matrices that show
// up in this project (2x2 monodromies, chain complexes of origamis with a few
// dozen cells). Every operation is overflow-checked; nothing here touches
// floating point.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "minfol/error.hpp"

namespace minfol {

using Int = std::int64_t;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);
Int gcd(Int a, Int b);

// ax + by = g = gcd(a, b), g >= 0.
struct ExtendedGcd {
  Int g, x, y;
};
ExtendedGcd extended_gcd(Int a, Int b);

// Floor division and the matching remainder (sign of b, nonnegative for b > 0).
Int floor_div(Int a, Int b);
Int floor_mod(Int a, Int b);

class Rational {
 public:
  Rational() = default;
  Rational(Int n) : num_(n) {}  // NOLINT: implicit from integers is intended
  Rational(Int n, Int d);

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Representative in [0, 1).
  Rational frac() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(checked_neg(num_), den_); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  Int num_ = 0;
  Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Int> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  std::vector<Int> apply(std::span<const Int> v) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  // row i += q * row j
  void add_row_multiple(std::size_t i, std::size_t j, Int q);
  // col i += q * col j
  void add_col_multiple(std::size_t i, std::size_t j, Int q);
  void negate_row(std::size_t i);
  void negate_col(std::size_t i);

  std::vector<std::vector<Int>> to_rows() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... >= 0.
// V_inverse is maintained alongside V so callers never need to invert.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix V_inverse;
  std::size_t rank = 0;

  // The nonzero diagonal entries d_1 .. d_rank.
  std::vector<Int> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& A);

// Fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& A);
std::size_t rank(const IntMatrix& A);

// Integer basis of the rational kernel {x : A x = 0}; each vector is primitive.
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& A);

// Rank over Q of a list of rational vectors (padded with zeros to a common length).
std::size_t rational_rank(const std::vector<std::vector<Rational>>& vectors);

}  // namespace minfol
