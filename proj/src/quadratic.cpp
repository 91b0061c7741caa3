#include "minfol/quadratic.hpp"

#include <cmath>
#include <sstream>

namespace minfol {

namespace {

bool is_perfect_square(Int n) {
  if (n < 0) return false;
  auto s = static_cast<Int>(std::llround(std::sqrt(static_cast<double>(n))));
  for (Int c = s > 1 ? s - 1 : 0; c <= s + 1; ++c)
    if (c * c == n) return true;
  return false;
}

Int common_radicand(const QuadraticIrrational& a, const QuadraticIrrational& b) {
  if (a.q() != 0 && b.q() != 0 && a.radicand() != b.radicand())
    throw DomainError("quadratic irrationals from different fields");
  return a.q() != 0 ? a.radicand() : b.radicand();
}

}  // namespace

QuadraticIrrational::QuadraticIrrational(Int p, Int q, Int radicand, Int r)
    : p_(p), q_(q), d_(radicand), r_(r) {
  if (r_ == 0) throw DomainError("quadratic irrational with zero denominator");
  if (d_ <= 1 || is_perfect_square(d_)) throw DomainError("radicand must be a positive non-square");
  normalize();
}

void QuadraticIrrational::normalize() {
  if (r_ < 0) {
    p_ = checked_neg(p_);
    q_ = checked_neg(q_);
    r_ = checked_neg(r_);
  }
  Int g = gcd(gcd(p_, q_), r_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

double QuadraticIrrational::to_double() const {
  return (static_cast<double>(p_) + static_cast<double>(q_) * std::sqrt(static_cast<double>(d_))) /
         static_cast<double>(r_);
}

int QuadraticIrrational::sign() const {
  auto sgn = [](Int x) { return (x > 0) - (x < 0); };
  int sp = sgn(p_), sq = sgn(q_);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // p and q*sqrt(D) have opposite signs: compare magnitudes squared.
  Int p2 = checked_mul(p_, p_);
  Int q2d = checked_mul(checked_mul(q_, q_), d_);
  if (p2 == q2d) return 0;  // impossible for non-square D, kept for totality
  return p2 > q2d ? sp : sq;
}

QuadraticIrrational QuadraticIrrational::inverse() const {
  // r / (p + q sqrt D) = r (p - q sqrt D) / (p^2 - q^2 D)
  Int norm = checked_sub(checked_mul(p_, p_), checked_mul(checked_mul(q_, q_), d_));
  if (norm == 0) throw DomainError("inverse of zero");
  return {checked_mul(r_, p_), checked_neg(checked_mul(r_, q_)), d_, norm};
}

QuadraticIrrational operator+(const QuadraticIrrational& a, const QuadraticIrrational& b) {
  Int d = common_radicand(a, b);
  return {checked_add(checked_mul(a.p_, b.r_), checked_mul(b.p_, a.r_)),
          checked_add(checked_mul(a.q_, b.r_), checked_mul(b.q_, a.r_)), d, checked_mul(a.r_, b.r_)};
}

QuadraticIrrational operator-(const QuadraticIrrational& a, const QuadraticIrrational& b) { return a + (-b); }

QuadraticIrrational operator*(const QuadraticIrrational& a, const QuadraticIrrational& b) {
  Int d = common_radicand(a, b);
  Int p = checked_add(checked_mul(a.p_, b.p_), checked_mul(checked_mul(a.q_, b.q_), d));
  Int q = checked_add(checked_mul(a.p_, b.q_), checked_mul(a.q_, b.p_));
  return {p, q, d, checked_mul(a.r_, b.r_)};
}

QuadraticIrrational operator/(const QuadraticIrrational& a, const QuadraticIrrational& b) {
  common_radicand(a, b);
  return a * b.inverse();
}

std::string QuadraticIrrational::to_string() const {
  std::ostringstream os;
  bool paren = r_ != 1 && q_ != 0 && p_ != 0;
  if (paren) os << '(';
  if (p_ != 0 || q_ == 0) os << p_;
  if (q_ != 0) {
    Int aq = q_ < 0 ? -q_ : q_;
    if (p_ != 0) os << (q_ < 0 ? " - " : " + ");
    else if (q_ < 0) os << '-';
    if (aq != 1) os << aq << '*';
    os << "sqrt(" << d_ << ')';
  }
  if (paren) os << ')';
  if (r_ != 1) os << '/' << r_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadraticIrrational& x) { return os << x.to_string(); }

}  // namespace minfol
