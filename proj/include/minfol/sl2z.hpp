#pragma once

// Integer 2x2 matrices of determinant one: trace trichotomy, stretch factors
// and eigen-slopes in exact arithmetic, periodic points on the torus, and a
// deterministic factorisation into the generators S and T.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "minfol/int_linalg.hpp"
#include "minfol/quadratic.hpp"

namespace minfol::sl2z {

struct IntMatrix2 {
  Int a = 1, b = 0, c = 0, d = 1;

  static constexpr IntMatrix2 identity() { return {1, 0, 0, 1}; }
  Int det() const { return checked_sub(checked_mul(a, d), checked_mul(b, c)); }
  Int trace() const { return checked_add(a, d); }
  IntMatrix2 operator-() const { return {checked_neg(a), checked_neg(b), checked_neg(c), checked_neg(d)}; }
  // Inverse of a determinant-one matrix.
  IntMatrix2 inverse() const { return {d, checked_neg(b), checked_neg(c), a}; }
  IntMatrix2 pow(unsigned n) const;
  IntMatrix to_matrix() const { return IntMatrix{{a, b}, {c, d}}; }
  std::string to_string() const;

  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y);

// Parses "a b c d" (whitespace or comma separated).
IntMatrix2 parse_matrix(const std::string& text);

enum class Token { S, T, TInverse, MinusI };

IntMatrix2 token_matrix(Token t);
std::string token_name(Token t);
Token parse_token(const std::string& name);
IntMatrix2 word_product(const std::vector<Token>& word);

struct Periodic {
  int order;
};

struct Parabolic {
  Int n;      // shear of the normal form (1 n; 0 1)
  int sign;   // sign * A is conjugate to the normal form
  IntMatrix2 conjugator;  // g with g (1 n; 0 1) g^-1 = sign * A
};

struct Anosov {
  int sign;  // sign(tr A); the eigenvalue of A is sign * lambda
  QuadraticIrrational lambda;
  QuadraticIrrational lambda_inverse;
  QuadraticIrrational unstable_slope;  // slope y/x of u+ (eigenvalue sign*lambda)
  QuadraticIrrational stable_slope;    // slope y/x of u- (eigenvalue sign/lambda)
};

using TraceClass = std::variant<Periodic, Parabolic, Anosov>;

// Throws DomainError when det(A) != 1.
void require_sl2z(const IntMatrix2& A);

TraceClass classify(const IntMatrix2& A);
bool is_anosov(const IntMatrix2& A);

struct PeriodicPoints {
  Int count;
  std::vector<std::pair<Rational, Rational>> points;  // sorted, coordinates in [0, 1)
};

// Points x of (Q/Z)^2 with A^n x = x. Requires A Anosov, n >= 1.
PeriodicPoints periodic_points(const IntMatrix2& A, unsigned n);

// Tokens t_1..t_k with t_1 * ... * t_k = A.
std::vector<Token> decompose_st(const IntMatrix2& A);

}  // namespace minfol::sl2z
