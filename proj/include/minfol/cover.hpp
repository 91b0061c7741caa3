#pragma once

// Branched covers of the torus and the sphere described combinatorially:
// ramification profiles, Riemann-Hurwitz Euler characteristics, permutation
// monodromy of punctured-surface groups, the cyclic pillowcase family and the
// leaf-genus growth estimate for branched covers of disks.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minfol/permutation.hpp"

namespace minfol::cover {

struct BranchPoint {
  std::string label;
  std::vector<int> fibre;  // ramification indices, sorted descending
};

struct RamificationProfile {
  int degree = 1;
  std::vector<BranchPoint> branch_points;
};

// Throws DomainError unless every fibre partitions the degree.
void validate(const RamificationProfile& profile);

// d * base_chi - sum over all fibre entries of (e - 1).
long riemann_hurwitz_chi(long base_chi, const RamificationProfile& profile);

// Genus of a closed orientable surface with the given Euler characteristic.
long genus_from_chi(long chi);

enum class Base { Torus, Sphere };
std::string base_name(Base b);

// Monodromy of a cover of a punctured torus or sphere.
//
// Conventions: loops compose left to right and a loop word maps to the
// product of permutations applied in the same order (right action).
// Torus base: generators m, p of the torus and alpha_2..alpha_n around the
// punctures p_2..p_n; alpha_1 is determined by alpha_1 ... alpha_n [m, p] = 1
// with [m, p] = m p m^-1 p^-1. Sphere base: alpha_2..alpha_n, with
// alpha_1 ... alpha_n = 1. Every alpha_i is a counterclockwise loop.
struct CoverSpec {
  Base base = Base::Torus;
  int degree = 1;
  std::vector<std::string> punctures;  // p_1..p_n
  // Keys: "m", "p" (torus only), and "alpha_2".."alpha_n".
  std::map<std::string, Permutation> monodromy;
};

// Image of alpha_1 forced by the surface-group relation.
Permutation alpha_one(const CoverSpec& spec);
// Image of the loop around every puncture, alpha_1 first.
std::vector<Permutation> puncture_monodromy(const CoverSpec& spec);
bool is_transitive(const CoverSpec& spec);
// Checks transitivity, degrees and generator names; throws DomainError.
void validate(const CoverSpec& spec);
RamificationProfile profile_of(const CoverSpec& spec);
long genus_of(const CoverSpec& spec);

struct PillowcaseResult {
  long genus;
  RamificationProfile sphere_profile;                // degree d over the four corners
  std::optional<RamificationProfile> torus_profile;  // 2d-fold over one point
};

// Admissibility conditions 0 < a_i <= d, gcd(d, a_1..a_4) = 1 and
// sum a_i = 0 mod d; every failing condition is named in the error.
PillowcaseResult pillowcase_genus(int d, const std::vector<int>& a);

// Sphere cover w^d = prod (z - z_i)^{a_i}: alpha_i acts as the shift by a_i.
CoverSpec pillowcase_sphere_cover(int d, const std::vector<int>& a);

// Two-fold cover of the torus branched at n punctures, n even.
CoverSpec build_double_cover(int n);

struct LocalRamification {
  int count;  // ramification points over the branch point
  int index;  // their common ramification index
};

struct LeafGrowth {
  std::vector<long> chi;  // chi(D'_1), ..., chi(D'_k)
  long bound;             // d - k
};

// Euler characteristics of the lifts of disks containing 1..k branch points.
// A single-entry profile list is reused for every branch point.
LeafGrowth leaf_genus_growth(int d, const std::vector<LocalRamification>& per_point, int k);

}  // namespace minfol::cover
