#include "minfol/torus3.hpp"

#include <cstdlib>

#include "minfol/error.hpp"

namespace minfol::torus3 {

std::string class_name(MonodromyClass c) {
  switch (c) {
    case MonodromyClass::Periodic: return "Periodic";
    case MonodromyClass::Reducible: return "Reducible";
    case MonodromyClass::Anosov: return "Anosov";
    case MonodromyClass::PseudoAnosov: return "PseudoAnosov";
  }
  return "?";
}

std::string geometry_name(Geometry g) {
  switch (g) {
    case Geometry::E3: return "R3";
    case Geometry::Nil: return "Nil";
    case Geometry::Sol: return "Sol";
    case Geometry::H2xR: return "H2xR";
    case Geometry::SL2R: return "SL2R~";
    case Geometry::H3: return "H3";
    case Geometry::IncompressibleTorus: return "incompressible torus";
  }
  return "?";
}

void MonodromySummary::validate() const {
  if (genus < 1) throw DomainError("fibre genus must be at least 1");
  if (genus == 1 && kind == MonodromyClass::PseudoAnosov)
    throw DomainError("a genus-one monodromy is Anosov, not pseudo-Anosov");
  if (genus >= 2 && kind == MonodromyClass::Anosov)
    throw DomainError("Anosov monodromy requires a genus-one fibre; use PseudoAnosov");
  const bool stretching = kind == MonodromyClass::Anosov || kind == MonodromyClass::PseudoAnosov;
  if (lambda && !stretching) throw DomainError("stretch factor given for a non-stretching class");
  if (lambda && !(*lambda > QuadraticIrrational::rational(1, 1, lambda->radicand())))
    throw DomainError("stretch factor must exceed 1");
  if (torelli_k && (*torelli_k < 0 || *torelli_k > 2 * genus))
    throw DomainError("torelli_k must lie in [0, 2g]");
}

std::optional<long> MonodromySummary::b1() const {
  if (!torelli_k) return std::nullopt;
  return *torelli_k + 1;
}

MonodromySummary summarize(const sl2z::IntMatrix2& A) {
  MonodromySummary m;
  m.genus = 1;
  const auto cls = sl2z::classify(A);
  if (std::holds_alternative<sl2z::Periodic>(cls)) {
    m.kind = MonodromyClass::Periodic;
  } else if (std::holds_alternative<sl2z::Parabolic>(cls)) {
    m.kind = MonodromyClass::Reducible;
  } else {
    m.kind = MonodromyClass::Anosov;
    m.lambda = std::get<sl2z::Anosov>(cls).lambda;
  }
  // On the torus H1 = Z^2 and the action is A itself.
  m.torelli_k = static_cast<long>(2 - rank(A.to_matrix() - IntMatrix::identity(2)));
  return m;
}

GeometryReport geometry_classify(const MonodromySummary& m) {
  m.validate();
  GeometryReport r{Geometry::IncompressibleTorus, std::nullopt};
  if (m.kind == MonodromyClass::Reducible) return r;
  if (m.genus == 1) {
    if (m.kind == MonodromyClass::Periodic) {
      r.geometry = Geometry::E3;
      r.note = "fundamental group of polynomial growth: no foliation by hyperbolic surfaces";
    } else {
      r.geometry = Geometry::Sol;
    }
  } else {
    r.geometry = m.kind == MonodromyClass::Periodic ? Geometry::H2xR : Geometry::H3;
  }
  return r;
}

EulerReport euler_report(long base_genus, long euler_class) {
  if (base_genus < 2) throw DomainError("euler_report: base genus must be at least 2 (hyperbolic base)");
  EulerReport r{};
  r.abs_euler = euler_class < 0 ? checked_neg(euler_class) : euler_class;
  const long bound = 2 * base_genus - 2;
  r.geometry = euler_class == 0 ? Geometry::H2xR : Geometry::SL2R;
  r.milnor_wood_ok = r.abs_euler <= bound;
  r.transverse_to_fibration_possible = r.milnor_wood_ok;
  r.borderline = r.abs_euler == bound;
  return r;
}

PeriodRank period_group_rank(const std::vector<std::vector<Rational>>& periods) {
  if (periods.empty()) throw DomainError("period_group_rank: empty period list");
  const long r = static_cast<long>(rational_rank(periods));
  if (r == 0) throw DomainError("period_group_rank: all periods vanish");
  PeriodRank out{r, r - 1, ""};
  out.remark = r >= 2 ? "rank >= 2: leaves are noncompact and the foliation is minimal"
                      : "rank 1: the closed form has compact leaves";
  return out;
}

}  // namespace minfol::torus3
