#include "minfol/sl2z.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace minfol::sl2z {

IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
  return {checked_add(checked_mul(x.a, y.a), checked_mul(x.b, y.c)),
          checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.d)),
          checked_add(checked_mul(x.c, y.a), checked_mul(x.d, y.c)),
          checked_add(checked_mul(x.c, y.b), checked_mul(x.d, y.d))};
}

IntMatrix2 IntMatrix2::pow(unsigned n) const {
  IntMatrix2 result = identity(), base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

std::string IntMatrix2::to_string() const {
  std::ostringstream os;
  os << '(' << a << ' ' << b << "; " << c << ' ' << d << ')';
  return os.str();
}

IntMatrix2 parse_matrix(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream is(cleaned);
  Int v[4];
  for (auto& x : v)
    if (!(is >> x)) throw DomainError("matrix must be four integers \"a b c d\", got \"" + text + "\"");
  std::string rest;
  if (is >> rest) throw DomainError("matrix must be four integers \"a b c d\", got \"" + text + "\"");
  return {v[0], v[1], v[2], v[3]};
}

IntMatrix2 token_matrix(Token t) {
  switch (t) {
    case Token::S: return {0, -1, 1, 0};
    case Token::T: return {1, 1, 0, 1};
    case Token::TInverse: return {1, -1, 0, 1};
    case Token::MinusI: return {-1, 0, 0, -1};
  }
  return IntMatrix2::identity();
}

std::string token_name(Token t) {
  switch (t) {
    case Token::S: return "S";
    case Token::T: return "T";
    case Token::TInverse: return "T^-1";
    case Token::MinusI: return "-I";
  }
  return "?";
}

Token parse_token(const std::string& name) {
  if (name == "S") return Token::S;
  if (name == "T") return Token::T;
  if (name == "T^-1" || name == "Ti" || name == "t") return Token::TInverse;
  if (name == "-I" || name == "minusI" || name == "J") return Token::MinusI;
  throw DomainError("unknown SL(2,Z) token \"" + name + "\" (expected S, T, T^-1, -I)");
}

IntMatrix2 word_product(const std::vector<Token>& word) {
  IntMatrix2 m = IntMatrix2::identity();
  for (Token t : word) m = m * token_matrix(t);
  return m;
}

void require_sl2z(const IntMatrix2& A) {
  if (A.det() != 1)
    throw DomainError("matrix " + A.to_string() + " has determinant " + std::to_string(A.det()) + ", expected 1");
}

namespace {

Parabolic parabolic_normal_form(const IntMatrix2& A) {
  const int sign = A.trace() > 0 ? 1 : -1;
  const IntMatrix2 P = sign > 0 ? A : -A;  // trace 2, P != I
  // P - I = n (-pq, p^2; -q^2, pq) for primitive (p, q) = g e_1.
  const Int na = P.a - 1, nb = P.b, nc = P.c, nd = P.d - 1;
  Int n = gcd(gcd(na, nb), gcd(nc, nd));
  if (nb < 0 || (nb == 0 && nc > 0)) n = -n;
  auto isqrt = [](Int x) {
    auto r = static_cast<Int>(std::llround(std::sqrt(static_cast<double>(x))));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
  };
  Int p = isqrt(nb / n);
  Int q = isqrt(-nc / n);
  if (checked_mul(p, q) != nd / n) q = -q;
  // Complete (p, q) to g = (p r; q s) with ps - qr = 1.
  auto eg = extended_gcd(p, q);  // p x + q y = 1
  IntMatrix2 g{p, checked_neg(eg.y), q, eg.x};
  return {n, sign, g};
}

}  // namespace

TraceClass classify(const IntMatrix2& A) {
  require_sl2z(A);
  const Int tr = A.trace();
  const Int atr = tr < 0 ? -tr : tr;
  if (atr < 2) {
    // Characteristic polynomial x^2 - tr x + 1 with tr in {-1, 0, 1}.
    return Periodic{tr == 0 ? 4 : (tr == 1 ? 6 : 3)};
  }
  if (atr == 2) {
    if (A == IntMatrix2::identity()) return Periodic{1};
    if (A == -IntMatrix2::identity()) return Periodic{2};
    return parabolic_normal_form(A);
  }
  const int sign = tr > 0 ? 1 : -1;
  const Int radicand = checked_sub(checked_mul(atr, atr), 4);
  QuadraticIrrational lambda(atr, 1, radicand, 2);
  QuadraticIrrational lambda_inv(atr, -1, radicand, 2);
  // (A - mu I) (1, s)^T = 0  =>  s = (mu - a) / b; b != 0 whenever |tr| > 2.
  auto slope = [&](const QuadraticIrrational& mu) {
    return (mu - QuadraticIrrational::rational(A.a, 1, radicand)) / QuadraticIrrational::rational(A.b, 1, radicand);
  };
  const QuadraticIrrational s_mult = QuadraticIrrational::rational(sign, 1, radicand);
  return Anosov{sign, lambda, lambda_inv, slope(s_mult * lambda), slope(s_mult * lambda_inv)};
}

bool is_anosov(const IntMatrix2& A) { return std::holds_alternative<Anosov>(classify(A)); }

PeriodicPoints periodic_points(const IntMatrix2& A, unsigned n) {
  if (n == 0) throw DomainError("period must be positive");
  if (!is_anosov(A)) throw DomainError("periodic points are enumerated only for Anosov matrices");
  const IntMatrix2 An = A.pow(n);
  const IntMatrix B{{An.a - 1, An.b}, {An.c, An.d - 1}};
  const Int det = determinant(B);
  const SmithForm snf = smith_normal_form(B);
  // U B V = D, so B x is integral iff D (V^-1 x) is integral; x = V y, y_i in (1/d_i) Z.
  const Int d1 = snf.D(0, 0), d2 = snf.D(1, 1);
  PeriodicPoints out{det < 0 ? -det : det, {}};
  for (Int j1 = 0; j1 < d1; ++j1)
    for (Int j2 = 0; j2 < d2; ++j2) {
      const Rational y1(j1, d1), y2(j2, d2);
      const Rational x1 = Rational(snf.V(0, 0)) * y1 + Rational(snf.V(0, 1)) * y2;
      const Rational x2 = Rational(snf.V(1, 0)) * y1 + Rational(snf.V(1, 1)) * y2;
      out.points.emplace_back(x1.frac(), x2.frac());
    }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

std::vector<Token> decompose_st(const IntMatrix2& A) {
  require_sl2z(A);
  // Invariant: word_product(word) * M == A.
  std::vector<Token> word;
  IntMatrix2 M = A;
  auto emit_shear = [&](Int q) {
    // M = T^q M'  =>  M' = T^-q M (row1 -= q row2)
    for (Int k = 0; k < (q < 0 ? -q : q); ++k) word.push_back(q > 0 ? Token::T : Token::TInverse);
    M = {checked_sub(M.a, checked_mul(q, M.c)), checked_sub(M.b, checked_mul(q, M.d)), M.c, M.d};
  };
  while (M.c != 0) {
    emit_shear(M.a / M.c);  // truncated quotient leaves |a| < |c|
    // M = S M'  =>  M' = S^-1 M = (c d; -a -b)
    word.push_back(Token::S);
    M = {M.c, M.d, checked_neg(M.a), checked_neg(M.b)};
  }
  // Now M = (+-1 b; 0 +-1).
  if (M.a < 0) {
    word.push_back(Token::MinusI);
    M = -M;
  }
  emit_shear(M.b);
  return word;
}

}  // namespace minfol::sl2z
