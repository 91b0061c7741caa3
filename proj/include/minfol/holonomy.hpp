#pragma once

// Transverse dynamics on the circle R/Z: rotations, the doubling map,
// projective actions of SL(2,R) on the boundary circle and affine maps of
// the line with linear part a power of two. Orbit-gap statistics, fixed-point
// searches over affine words, rotation numbers and commutator checks.
//
// Boundary parameterisation: t in R/Z corresponds to x = tan(pi (t - 1/2)) on
// the real projective line, so elliptic(theta) is the rotation by theta/2pi.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace minfol::holonomy {

inline constexpr double kFixedTolerance = 1e-9;
inline constexpr double kDeviationTolerance = 1e-6;
inline constexpr double kDetTolerance = 1e-12;

struct Rotation {
  double angle;  // in turns, mod 1
};
struct Doubling {};
struct Mobius {
  double a, b, c, d;
};
struct AffineLine {
  long k;  // linear part 2^k
  double b;
};

using CircleGen = std::variant<Rotation, Doubling, Mobius, AffineLine>;

// Scales to determinant one; throws DomainError for det <= 0 or when the
// rescaled determinant misses 1 by more than kDetTolerance.
Mobius make_mobius(double a, double b, double c, double d);
// (cos theta/2, sin theta/2; -sin theta/2, cos theta/2): rotation by theta/2pi.
Mobius elliptic(double theta);
Mobius operator*(const Mobius& x, const Mobius& y);
Mobius inverse(const Mobius& m);

// Mini-language: "rot:0.25", "dbl", "aff:k=1,b=0.5", "mob:a,b,c,d".
// Lists are separated by ';'.
CircleGen parse_gen(const std::string& text);
std::vector<CircleGen> parse_gens(const std::string& text);
std::string to_string(const CircleGen& g);

// Canonical lift to R of the circle map (Mobius maps are taken with
// nonnegative trace, which fixes the lift in (t - 1, t + 1)).
double lift(const CircleGen& g, double t);
double apply_circle(const CircleGen& g, double t);  // result in [0, 1)

// Seeded 64-bit linear congruential generator; index(m) returns
// ((state >> 32) * m) >> 32 after one step.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::size_t index(std::size_t m);

 private:
  std::uint64_t state_;
};

struct OrbitStats {
  long n_steps;
  double max_gap;
  bool epsilon_dense;
  double epsilon;
};

// n orbit points x_0 = start, x_{j+1} = g(x_j) with g drawn uniformly from
// gens by Lcg(seed).
OrbitStats orbit_density(const std::vector<CircleGen>& gens, double start, long n, double epsilon,
                         std::uint64_t seed);

struct OrbitCell {
  double start;
  std::uint64_t seed;
};
// Independent cells evaluated on up to `threads` workers; results in input order.
std::vector<OrbitStats> orbit_density_batch(const std::vector<CircleGen>& gens, const std::vector<OrbitCell>& cells,
                                            long n, double epsilon, unsigned threads);

// Letter 2i is generator i, letter 2i+1 its inverse. Words apply left to right.
struct PseudogroupWord {
  std::vector<int> letters;
  std::string to_string() const;
};

// (k1, b1) o (k2, b2) = (k1 + k2, 2^k1 b2 + b1).
AffineLine compose(const AffineLine& f, const AffineLine& g);
AffineLine inverse(const AffineLine& f);
AffineLine evaluate(const PseudogroupWord& w, const std::vector<AffineLine>& gens);

struct StabilizerWitness {
  PseudogroupWord word;
  AffineLine map;
  double residual;  // |W(x) - x|
};

enum class StabilizerStructure { Trivial, CyclicEvidence, Counterexample };

struct StabilizerResult {
  std::vector<StabilizerWitness> witnesses;  // shortlex order
  StabilizerStructure structure = StabilizerStructure::Trivial;
  std::optional<StabilizerWitness> primitive;
  std::optional<StabilizerWitness> counterexample;
  std::optional<double> closed_form_fixed_point;  // b / (1 - 2^k) of the primitive witness
};

StabilizerResult stabilizer_search(const std::vector<AffineLine>& gens, double x, int max_len);

struct RotationNumber {
  double value;  // Birkhoff average of the canonical lift
  double error_bound;
};

// The word applies left to right. Doubling and affine maps with k != 0 are rejected.
RotationNumber rotation_number(const std::vector<CircleGen>& word, long n);

struct CommutatorCheck {
  double max_deviation;
  bool ok;
  bool det_ok;
};

CommutatorCheck verify_commutator_product(const std::vector<std::pair<Mobius, Mobius>>& pairs, double target_angle);

// Circular distance on R/Z.
double circle_distance(double s, double t);

}  // namespace minfol::holonomy
