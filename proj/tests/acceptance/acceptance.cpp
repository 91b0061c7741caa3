// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "generators.hpp"
#include "minfol/cli.hpp"
#include "minfol/cover.hpp"
#include "minfol/holonomy.hpp"
#include "minfol/homology.hpp"
#include "minfol/origami.hpp"
#include "minfol/sl2z.hpp"
#include "minfol/torus3.hpp"

using namespace minfol;

namespace {

// Pinned tolerances and budgets.
constexpr double kOrbitGapRotation = 1e-2;
constexpr double kOrbitGapHirsch = 1e-3;
constexpr long kOrbitStepsRotation = 10000;
constexpr long kOrbitStepsHirsch = 100000;
constexpr std::uint64_t kOrbitSeed = 1;
constexpr int kStabilizerMaxLen = 8;

struct Check {
  bool ok = true;
  std::ostringstream why;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) why << "; ";
      why << what;
      ok = false;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream budget;
  budget << "took " << secs << " s, budget " << budget_s << " s";
  c.require(secs < budget_s, budget.str());
  std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " (" << secs << " s)";
  if (!c.ok) std::cout << " -- " << c.why.str();
  std::cout << "\n";
  if (!c.ok) ++failures;
}

report::Json cli_json(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return code == 0 ? report::Json::parse(out.str()) : report::Json();
}

}  // namespace

int main() {
  criterion(1, "pillowcase d=4, a=(1,1,1,1): genus 3, degree-8 torus profile [2,2,2,2]", 1.0, [](Check& c) {
    int code = 0;
    const auto j = cli_json({"cover", "pillowcase", "--d", "4", "--a", "1,1,1,1"}, code);
    c.require(code == 0, "CLI exit code " + std::to_string(code));
    if (code != 0) return;
    const auto& r = j["results"];
    c.require(r["genus"] == 3, "genus " + r["genus"].dump());
    c.require(r["torus_profile"]["degree"] == 8, "torus degree");
    c.require(r["torus_profile"]["branch_points"].size() == 1, "one branch point");
    c.require(r["torus_profile"]["branch_points"][0]["fibre"] == report::Json::array({2, 2, 2, 2}),
              "fibre " + r["torus_profile"]["branch_points"][0]["fibre"].dump());
  });

  criterion(2, "double covers n = 2,4,6,8 have genus n/2 + 1", 1.0, [](Check& c) {
    for (int n = 2; n <= 8; n += 2) {
      const auto spec = cover::build_double_cover(n);
      const long g = cover::genus_of(spec);
      c.require(g == n / 2 + 1, "n=" + std::to_string(n) + " genus " + std::to_string(g));
      c.require(2 - 2 * g == -n, "chi mismatch at n=" + std::to_string(n));
      c.require(cover::is_transitive(spec), "not transitive at n=" + std::to_string(n));
    }
  });

  criterion(3, "cat map: lambda = (3+sqrt5)/2, one fixed point, five period-2 points", 1.0, [](Check& c) {
    const sl2z::IntMatrix2 A{2, 1, 1, 1};
    const auto an = std::get<sl2z::Anosov>(sl2z::classify(A));
    c.require(an.lambda == QuadraticIrrational(3, 1, 5, 2), "lambda " + an.lambda.to_string());
    c.require(an.lambda + an.lambda.inverse() == QuadraticIrrational::rational(3, 1, 5), "lambda + 1/lambda != 3");
    const auto p1 = sl2z::periodic_points(A, 1);
    c.require(p1.count == 1 && p1.points.size() == 1 && p1.points[0] == std::make_pair(Rational(0), Rational(0)),
              "fixed points");
    const auto p2 = sl2z::periodic_points(A, 2);
    std::set<std::pair<Rational, Rational>> brute;
    const auto A2 = A.pow(2);
    for (Int i = 0; i < 5; ++i)
      for (Int j = 0; j < 5; ++j)
        if (floor_mod(A2.a * i + A2.b * j - i, 5) == 0 && floor_mod(A2.c * i + A2.d * j - j, 5) == 0)
          brute.insert({Rational(i, 5), Rational(j, 5)});
    c.require(p2.count == 5 && p2.points.size() == 5, "period-2 count " + std::to_string(p2.count));
    c.require(std::set<std::pair<Rational, Rational>>(p2.points.begin(), p2.points.end()) == brute,
              "period-2 points differ from brute force");
  });

  criterion(4, "Wollmilchsau: genus 3, stratum {4pi}^4, verified lift, 6x6 symplectic action, k <= 4", 10.0,
            [](Check& c) {
              const auto o = origami::wollmilchsau();
              const auto b = origami::build(o.right(), o.up());
              c.require(b.genus == 3, "genus " + std::to_string(b.genus));
              c.require(b.stratum == std::vector<int>{2, 2, 2, 2}, "stratum");
              const auto w = origami::lift_automorphism({2, 1, 1, 1}, o);
              c.require(w.has_value(), "no lift");
              if (!w) return;
              c.require(origami::verify(*w, o), "witness does not verify");
              const auto act = homology::induced_action(*w, o);
              c.require(act.M.rows() == 6 && act.M.cols() == 6, "action is not 6x6");
              c.require(act.M.transpose() * act.basis.intersection * act.M == act.basis.intersection,
                        "M^T J M != J");
              c.require(act.k <= 4, "k = " + std::to_string(act.k));
              c.require(act.fixed_in_projection_kernel, "fixed subspace not in the projection kernel");
            });

  criterion(5, "all transitive origamis d <= 5: rank H1 = 2g, preserved by every token", 60.0, [](Check& c) {
    using sl2z::Token;
    std::size_t count = 0;
    for (std::size_t d = 1; d <= 5; ++d)
      for (const auto& o : origami::enumerate_transitive(d)) {
        const auto rank = homology::homology_basis(o).rank;
        if (static_cast<long>(rank) != 2 * o.genus()) {
          c.require(false, "rank mismatch on " + o.right().to_string() + " / " + o.up().to_string());
          return;
        }
        for (Token t : {Token::S, Token::T, Token::TInverse, Token::MinusI}) {
          const auto img = origami::act(t, o);
          if (img.genus() != o.genus() || homology::homology_basis(img).rank != rank) {
            c.require(false, "token " + sl2z::token_name(t) + " changes genus or rank");
            return;
          }
        }
        ++count;
      }
    c.require(count > 0, "no origamis enumerated");
  });

  criterion(6, "Torelli: k(I_2g) = 2g, k(cat) = 0, invariant under 100 unimodular changes", 5.0, [](Check& c) {
    const auto o = origami::wollmilchsau();
    const auto J = homology::homology_basis(o).intersection;
    const auto id = homology::torelli_order(IntMatrix::identity(6), J);
    c.require(id.k == 6 && id.b1 == 7, "identity: k=" + std::to_string(id.k));
    const IntMatrix J2{{0, 1}, {-1, 0}};
    const IntMatrix cat{{2, 1}, {1, 1}};
    const auto ct = homology::torelli_order(cat, J2);
    c.require(ct.k == 0 && ct.b1 == 1, "cat map: k=" + std::to_string(ct.k));
    const auto M = homology::induced_action(*origami::lift_automorphism({2, 1, 1, 1}, o), o).M;
    const auto base = homology::torelli_order(M, J).k;
    gen::Rng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
      auto P = IntMatrix::identity(6), Q = IntMatrix::identity(6);
      for (int s = 0; s < 10; ++s) {
        const auto i = static_cast<std::size_t>(gen::uniform(rng, 0, 5));
        auto j = static_cast<std::size_t>(gen::uniform(rng, 0, 4));
        if (j >= i) ++j;
        const int q = gen::uniform(rng, -2, 2);
        P.add_col_multiple(i, j, q);
        Q.add_row_multiple(j, i, -q);
      }
      if (P * Q != IntMatrix::identity(6)) {
        c.require(false, "basis change is not unimodular");
        return;
      }
      const auto t = homology::torelli_order(Q * M * P, P.transpose() * J * P);
      if (t.k != base || !t.symplectic) {
        c.require(false, "k changed under basis change");
        return;
      }
    }
  });

  criterion(7, "Euler/Milnor-Wood at g = 2: transverse iff |e| <= 2, geometry flips at e = 0", 1.0, [](Check& c) {
    for (long e = -6; e <= 6; ++e) {
      const auto r = torus3::euler_report(2, e);
      c.require(r.transverse_to_fibration_possible == (std::abs(e) <= 2), "transversality at e=" + std::to_string(e));
      c.require((r.geometry == torus3::Geometry::H2xR) == (e == 0), "geometry at e=" + std::to_string(e));
    }
  });

  criterion(8, "holonomy: rotation and Hirsch orbits dense, stabilizer of -1 cyclic with x -> 2x+1", 30.0,
            [](Check& c) {
              const double alpha = std::sqrt(2.0) - 1.0;
              const auto a = holonomy::orbit_density({holonomy::Rotation{alpha}}, 0.0, kOrbitStepsRotation,
                                                     kOrbitGapRotation, kOrbitSeed);
              c.require(a.max_gap < kOrbitGapRotation, "rotation max_gap " + std::to_string(a.max_gap));
              const auto b = holonomy::orbit_density({holonomy::Doubling{}, holonomy::Rotation{alpha}}, 0.1234,
                                                     kOrbitStepsHirsch, kOrbitGapHirsch, kOrbitSeed);
              c.require(b.max_gap < kOrbitGapHirsch, "Hirsch max_gap " + std::to_string(b.max_gap));
              const auto b2 = holonomy::orbit_density({holonomy::Doubling{}, holonomy::Rotation{alpha}}, 0.1234,
                                                      kOrbitStepsHirsch, kOrbitGapHirsch, kOrbitSeed);
              c.require(b.max_gap == b2.max_gap, "orbit not deterministic per seed");
              const auto s = holonomy::stabilizer_search({{1, 0.0}, {0, 1.0}}, -1.0, kStabilizerMaxLen);
              c.require(s.structure == holonomy::StabilizerStructure::CyclicEvidence, "structure is not cyclic");
              c.require(s.primitive && s.primitive->map.k == 1 && s.primitive->map.b == 1.0,
                        "primitive witness is not x -> 2x + 1");
            });

  criterion(9, "leaf growth d=2, (1,2), k=50: strictly decreasing chi <= d - k", 1.0, [](Check& c) {
    const auto g = cover::leaf_genus_growth(2, {{1, 2}}, 50);
    c.require(g.chi.size() == 50, "length");
    for (std::size_t i = 0; i < g.chi.size(); ++i) {
      const long k = static_cast<long>(i) + 1;
      c.require(g.chi[i] <= 2 - k, "bound fails at k=" + std::to_string(k));
      if (i > 0) c.require(g.chi[i] < g.chi[i - 1], "not decreasing at k=" + std::to_string(k));
    }
    c.require(g.bound == 2 - 50, "bound");
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
