#pragma once

#include <ostream>
#include <string>

#include "minfol/int_linalg.hpp"

namespace minfol {

// Exact element (p + q*sqrt(D)) / r of the real quadratic field Q(sqrt(D)).
// D > 1 is not a perfect square; r > 0 and gcd(p, q, r) = 1 after construction.
// Arithmetic between two values requires the same radicand unless one side
// is rational (q = 0).
class QuadraticIrrational {
 public:
  QuadraticIrrational(Int p, Int q, Int radicand, Int r = 1);
  static QuadraticIrrational rational(Int p, Int r, Int radicand) { return {p, 0, radicand, r}; }

  Int p() const { return p_; }
  Int q() const { return q_; }
  Int radicand() const { return d_; }
  Int r() const { return r_; }

  bool is_rational() const { return q_ == 0; }
  double to_double() const;
  // Exact sign of the value: -1, 0 or +1.
  int sign() const;

  QuadraticIrrational conjugate() const { return {p_, checked_neg(q_), d_, r_}; }
  QuadraticIrrational inverse() const;

  friend QuadraticIrrational operator+(const QuadraticIrrational& a, const QuadraticIrrational& b);
  friend QuadraticIrrational operator-(const QuadraticIrrational& a, const QuadraticIrrational& b);
  friend QuadraticIrrational operator*(const QuadraticIrrational& a, const QuadraticIrrational& b);
  friend QuadraticIrrational operator/(const QuadraticIrrational& a, const QuadraticIrrational& b);
  QuadraticIrrational operator-() const { return {checked_neg(p_), checked_neg(q_), d_, r_}; }

  friend bool operator==(const QuadraticIrrational& a, const QuadraticIrrational& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.r_ == b.r_ && (a.q_ == 0 || a.d_ == b.d_);
  }
  friend bool operator<(const QuadraticIrrational& a, const QuadraticIrrational& b) {
    return (a - b).sign() < 0;
  }
  friend bool operator>(const QuadraticIrrational& a, const QuadraticIrrational& b) { return b < a; }

  std::string to_string() const;

 private:
  void normalize();
  Int p_, q_, d_, r_;
};

std::ostream& operator<<(std::ostream& os, const QuadraticIrrational& x);

}  // namespace minfol
