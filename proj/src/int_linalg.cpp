#include "minfol/int_linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

namespace minfol {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("multiplication");
  return r;
}

Int checked_neg(Int a) { return checked_sub(0, a); }

Int gcd(Int a, Int b) {
  a = a < 0 ? checked_neg(a) : a;
  b = b < 0 ? checked_neg(b) : b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

ExtendedGcd extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r = checked_sub(old_r, checked_mul(q, r));
    std::swap(old_r, r);
    old_s = checked_sub(old_s, checked_mul(q, s));
    std::swap(old_s, s);
    old_t = checked_sub(old_t, checked_mul(q, t));
    std::swap(old_t, t);
  }
  if (old_r < 0) return {checked_neg(old_r), checked_neg(old_s), checked_neg(old_t)};
  return {old_r, old_s, old_t};
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int floor_mod(Int a, Int b) { return checked_sub(a, checked_mul(floor_div(a, b), b)); }

// ---------------------------------------------------------------- Rational

Rational::Rational(Int n, Int d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  if (d < 0) {
    n = checked_neg(n);
    d = checked_neg(d);
  }
  Int g = gcd(n, d);
  num_ = n / g;
  den_ = d / g;
}

Rational Rational::frac() const { return Rational(floor_mod(num_, den_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  Int g = gcd(a.den_, b.den_);
  Int lhs = checked_mul(a.num_, b.den_ / g);
  Int rhs = checked_mul(b.num_, a.den_ / g);
  return Rational(checked_add(lhs, rhs), checked_mul(a.den_ / g, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  Int g1 = gcd(a.num_, b.den_);
  Int g2 = gcd(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("rational division by zero");
  return a * Rational(b.den_, b.num_);
}

bool operator<(const Rational& a, const Rational& b) { return (a - b).num_ < 0; }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  os << r.num();
  if (r.den() != 1) os << '/' << r.den();
  return os;
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        c(i, j) = checked_add(c(i, j), checked_mul(aik, b(k, j)));
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum dimension mismatch");
  IntMatrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = checked_add(a.data_[i], b.data_[i]);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix difference dimension mismatch");
  IntMatrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = checked_sub(a.data_[i], b.data_[i]);
  return c;
}

std::vector<Int> IntMatrix::apply(std::span<const Int> v) const {
  if (v.size() != cols_) throw DomainError("matrix-vector dimension mismatch");
  std::vector<Int> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out[i] = checked_add(out[i], checked_mul((*this)(i, j), v[j]));
  return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, Int q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(i, c) = checked_add((*this)(i, c), checked_mul(q, (*this)(j, c)));
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, Int q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, i) = checked_add((*this)(r, i), checked_mul(q, (*this)(r, j)));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = checked_neg((*this)(i, c));
}

void IntMatrix::negate_col(std::size_t i) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) = checked_neg((*this)(r, i));
}

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
  std::vector<std::vector<Int>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

// ---------------------------------------------------------------- Smith form

std::vector<Int> SmithForm::invariant_factors() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
  return out;
}

namespace {

// Row and column operations on the working matrix, mirrored into U, V, V^-1.
struct SmithWork {
  IntMatrix A, U, V, Vinv;

  void row_add(std::size_t i, std::size_t j, Int q) {
    A.add_row_multiple(i, j, q);
    U.add_row_multiple(i, j, q);
  }
  void row_swap(std::size_t i, std::size_t j) {
    A.swap_rows(i, j);
    U.swap_rows(i, j);
  }
  void row_negate(std::size_t i) {
    A.negate_row(i);
    U.negate_row(i);
  }
  // col i += q col j  <=>  A <- A E, E = I + q e_j e_i^T, E^-1 = I - q e_j e_i^T
  void col_add(std::size_t i, std::size_t j, Int q) {
    A.add_col_multiple(i, j, q);
    V.add_col_multiple(i, j, q);
    Vinv.add_row_multiple(j, i, checked_neg(q));
  }
  void col_swap(std::size_t i, std::size_t j) {
    A.swap_cols(i, j);
    V.swap_cols(i, j);
    Vinv.swap_rows(i, j);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t m = input.rows(), n = input.cols();
  SmithWork w{input, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(n)};
  IntMatrix& A = w.A;
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m, pj = n;
      Int best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (A(i, j) != 0 && (best == 0 || std::llabs(A(i, j)) < best)) {
            best = std::llabs(A(i, j));
            pi = i;
            pj = j;
          }
      if (best == 0) goto done;
      w.row_swap(t, pi);
      w.col_swap(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A(i, t) == 0) continue;
        w.row_add(i, t, checked_neg(A(i, t) / A(t, t)));
        if (A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A(t, j) == 0) continue;
        w.col_add(j, t, checked_neg(A(t, j) / A(t, t)));
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (A(i, j) % A(t, t) != 0) {
            w.row_add(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (A(t, t) < 0) w.row_negate(t);
  }
done:
  SmithForm out{std::move(w.U), std::move(w.A), std::move(w.V), std::move(w.Vinv), 0};
  for (std::size_t i = 0; i < std::min(m, n); ++i)
    if (out.D(i, i) != 0) ++out.rank;
  return out;
}

// ---------------------------------------------------------------- Bareiss

namespace {

// Fraction-free row echelon form in place; returns rank and the sign of the
// permutation applied to rows.
std::size_t bareiss(IntMatrix& A, int& sign) {
  const std::size_t m = A.rows(), n = A.cols();
  std::size_t r = 0;
  Int prev = 1;
  sign = 1;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && A(p, c) == 0) ++p;
    if (p == m) continue;
    if (p != r) {
      A.swap_rows(p, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        Int num = checked_sub(checked_mul(A(r, c), A(i, j)), checked_mul(A(i, c), A(r, j)));
        A(i, j) = num / prev;
      }
      A(i, c) = 0;
    }
    prev = A(r, c);
    ++r;
  }
  return r;
}

}  // namespace

Int determinant(const IntMatrix& A) {
  if (!A.square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  IntMatrix work = A;
  int sign = 1;
  if (bareiss(work, sign) < n) return 0;
  Int det = work(n - 1, n - 1);
  return sign < 0 ? checked_neg(det) : det;
}

std::size_t rank(const IntMatrix& A) {
  IntMatrix work = A;
  int sign = 1;
  return bareiss(work, sign);
}

std::vector<std::vector<Int>> kernel_basis(const IntMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  std::vector<std::vector<Rational>> R(m, std::vector<Rational>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) R[i][j] = Rational(A(i, j));

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && R[p][c].is_zero()) ++p;
    if (p == m) continue;
    std::swap(R[p], R[r]);
    Rational inv = Rational(1) / R[r][c];
    for (auto& x : R[r]) x = x * inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || R[i][c].is_zero()) continue;
      Rational f = R[i][c];
      for (std::size_t j = 0; j < n; ++j) R[i][j] -= f * R[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Int>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n);
    v[free] = Rational(1);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -R[k][free];
    Int l = 1;
    for (const auto& x : v) l = checked_mul(l / gcd(l, x.den()), x.den());
    std::vector<Int> iv(n);
    Int g = 0;
    for (std::size_t j = 0; j < n; ++j) {
      iv[j] = checked_mul(v[j].num(), l / v[j].den());
      g = gcd(g, iv[j]);
    }
    for (auto& x : iv) x /= g;
    basis.push_back(std::move(iv));
  }
  return basis;
}

std::size_t rational_rank(const std::vector<std::vector<Rational>>& vectors) {
  std::size_t n = 0;
  for (const auto& v : vectors) n = std::max(n, v.size());
  std::vector<std::vector<Rational>> R;
  for (const auto& v : vectors) {
    auto row = v;
    row.resize(n);
    R.push_back(std::move(row));
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < R.size(); ++c) {
    std::size_t p = r;
    while (p < R.size() && R[p][c].is_zero()) ++p;
    if (p == R.size()) continue;
    std::swap(R[p], R[r]);
    for (std::size_t i = r + 1; i < R.size(); ++i) {
      if (R[i][c].is_zero()) continue;
      Rational f = R[i][c] / R[r][c];
      for (std::size_t j = c; j < n; ++j) R[i][j] -= f * R[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace minfol
