#pragma once

// Mapping tori and circle bundles: geometry labels from monodromy data,
// Euler-class bookkeeping with the Milnor-Wood inequality, and the rank of a
// group of periods given in rational coordinates.

#include <optional>
#include <string>
#include <vector>

#include "minfol/int_linalg.hpp"
#include "minfol/quadratic.hpp"
#include "minfol/sl2z.hpp"

namespace minfol::torus3 {

enum class MonodromyClass { Periodic, Reducible, Anosov, PseudoAnosov };
std::string class_name(MonodromyClass c);

struct MonodromySummary {
  long genus = 1;
  MonodromyClass kind = MonodromyClass::Periodic;
  std::optional<QuadraticIrrational> lambda;  // stretch factor, > 1
  std::optional<long> torelli_k;              // in [0, 2g]

  // Throws DomainError when the fields are inconsistent.
  void validate() const;
  // b1 of the mapping torus, k + 1.
  std::optional<long> b1() const;
};

// Genus-one summary read off the trace of A.
MonodromySummary summarize(const sl2z::IntMatrix2& A);

enum class Geometry { E3, Nil, Sol, H2xR, SL2R, H3, IncompressibleTorus };
std::string geometry_name(Geometry g);

struct GeometryReport {
  Geometry geometry;
  std::optional<std::string> note;
};

GeometryReport geometry_classify(const MonodromySummary& m);

struct EulerReport {
  Geometry geometry;  // H2xR when e = 0, otherwise SL2R
  bool milnor_wood_ok;
  bool transverse_to_fibration_possible;
  bool borderline;  // |e| = 2g - 2
  long abs_euler;
};

EulerReport euler_report(long base_genus, long euler_class);

struct PeriodRank {
  long r;
  long leaf_cover_rank;
  std::string remark;
};

PeriodRank period_group_rank(const std::vector<std::vector<Rational>>& periods);

}  // namespace minfol::torus3
