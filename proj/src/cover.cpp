#include "minfol/cover.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "minfol/error.hpp"

namespace minfol::cover {

void validate(const RamificationProfile& profile) {
  if (profile.degree < 1) throw DomainError("cover degree must be positive");
  for (const auto& bp : profile.branch_points) {
    long sum = 0;
    for (int e : bp.fibre) {
      if (e < 1) throw DomainError("ramification index < 1 over " + bp.label);
      sum += e;
    }
    if (sum != profile.degree)
      throw DomainError("fibre over " + bp.label + " sums to " + std::to_string(sum) + ", expected degree " +
                        std::to_string(profile.degree));
  }
}

long riemann_hurwitz_chi(long base_chi, const RamificationProfile& profile) {
  validate(profile);
  long chi = profile.degree * base_chi;
  for (const auto& bp : profile.branch_points)
    for (int e : bp.fibre) chi -= e - 1;
  return chi;
}

long genus_from_chi(long chi) {
  if (chi > 2 || (chi % 2) != 0) throw DomainError("Euler characteristic " + std::to_string(chi) + " is not that of a closed orientable surface");
  return 1 - chi / 2;
}

std::string base_name(Base b) { return b == Base::Torus ? "torus" : "sphere"; }

namespace {

std::string alpha_key(std::size_t i) { return "alpha_" + std::to_string(i); }

const Permutation& lookup(const CoverSpec& spec, const std::string& key) {
  auto it = spec.monodromy.find(key);
  if (it == spec.monodromy.end()) throw DomainError("cover spec lacks monodromy for generator " + key);
  if (it->second.size() != static_cast<std::size_t>(spec.degree))
    throw DomainError("monodromy of " + key + " has the wrong degree");
  return it->second;
}

// Right action: the word x y maps to "apply x, then y" = y o x.
Permutation then(const Permutation& first, const Permutation& second) { return second * first; }

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.rbegin(), v.rend());
  return v;
}

}  // namespace

Permutation alpha_one(const CoverSpec& spec) {
  const std::size_t n = spec.punctures.size();
  if (n == 0) throw DomainError("cover spec has no punctures");
  Permutation rest = Permutation::identity(static_cast<std::size_t>(spec.degree));
  for (std::size_t i = 2; i <= n; ++i) rest = then(rest, lookup(spec, alpha_key(i)));
  if (spec.base == Base::Torus) {
    const Permutation& m = lookup(spec, "m");
    const Permutation& p = lookup(spec, "p");
    Permutation comm = then(then(then(m, p), m.inverse()), p.inverse());
    rest = then(rest, comm);
  }
  return rest.inverse();
}

std::vector<Permutation> puncture_monodromy(const CoverSpec& spec) {
  std::vector<Permutation> out{alpha_one(spec)};
  for (std::size_t i = 2; i <= spec.punctures.size(); ++i) out.push_back(lookup(spec, alpha_key(i)));
  return out;
}

bool is_transitive(const CoverSpec& spec) {
  std::vector<Permutation> gens;
  for (const auto& [k, g] : spec.monodromy) gens.push_back(g);
  return minfol::is_transitive(gens, static_cast<std::size_t>(spec.degree));
}

void validate(const CoverSpec& spec) {
  if (spec.degree < 1) throw DomainError("cover degree must be positive");
  for (const auto& [key, g] : spec.monodromy) {
    bool known = (spec.base == Base::Torus && (key == "m" || key == "p"));
    for (std::size_t i = 2; i <= spec.punctures.size(); ++i) known = known || key == alpha_key(i);
    if (!known) throw DomainError("unexpected generator " + key + " for a " + base_name(spec.base) + " cover");
    if (g.size() != static_cast<std::size_t>(spec.degree)) throw DomainError("monodromy of " + key + " has the wrong degree");
  }
  puncture_monodromy(spec);  // all generators present
  if (!is_transitive(spec)) throw DomainError("monodromy is not transitive: total space disconnected");
}

RamificationProfile profile_of(const CoverSpec& spec) {
  validate(spec);
  RamificationProfile prof{spec.degree, {}};
  auto loops = puncture_monodromy(spec);
  for (std::size_t i = 0; i < loops.size(); ++i)
    prof.branch_points.push_back({spec.punctures[i], sorted_desc(loops[i].cycle_type())});
  return prof;
}

long genus_of(const CoverSpec& spec) {
  return genus_from_chi(riemann_hurwitz_chi(spec.base == Base::Torus ? 0 : 2, profile_of(spec)));
}

PillowcaseResult pillowcase_genus(int d, const std::vector<int>& a) {
  if (d < 1) throw DomainError("pillowcase degree d must be positive");
  if (a.size() != 4) throw DomainError("pillowcase cover needs exactly four exponents a_1..a_4");
  std::vector<std::string> failures;
  for (std::size_t i = 0; i < 4; ++i)
    if (a[i] <= 0 || a[i] > d)
      failures.push_back("condition 0 < a_i <= d fails for a_" + std::to_string(i + 1) + " = " + std::to_string(a[i]));
  int g = d;
  for (int x : a) g = std::gcd(g, x);
  if (g != 1) failures.push_back("condition gcd(d, a_1, a_2, a_3, a_4) = 1 fails (gcd = " + std::to_string(g) + ")");
  long sum = std::accumulate(a.begin(), a.end(), 0L);
  if (sum % d != 0)
    failures.push_back("condition a_1 + a_2 + a_3 + a_4 = 0 mod d fails (sum = " + std::to_string(sum) + ")");
  if (!failures.empty()) {
    std::ostringstream os;
    for (std::size_t i = 0; i < failures.size(); ++i) os << (i ? "; " : "") << failures[i];
    throw DomainError(os.str());
  }

  PillowcaseResult out{};
  out.sphere_profile.degree = d;
  long gcd_sum = 0;
  bool all_coprime = true;
  for (std::size_t i = 0; i < 4; ++i) {
    int gi = std::gcd(d, a[i]);
    gcd_sum += gi;
    all_coprime = all_coprime && gi == 1;
    out.sphere_profile.branch_points.push_back({"z_" + std::to_string(i + 1), std::vector<int>(static_cast<std::size_t>(gi), d / gi)});
  }
  if (gcd_sum % 2 != 0) throw DomainError("sum of gcd(d, a_i) is odd; parameters do not define a closed surface");
  out.genus = d + 1 - gcd_sum / 2;

  const bool translation = d % 2 == 0 && std::all_of(a.begin(), a.end(), [](int x) { return x % 2 != 0; });
  if (translation && all_coprime) {
    RamificationProfile torus{2 * d, {{"p", std::vector<int>(4, d / 2)}}};
    out.torus_profile = torus;
  }
  return out;
}

CoverSpec pillowcase_sphere_cover(int d, const std::vector<int>& a) {
  pillowcase_genus(d, a);  // admissibility
  CoverSpec spec{Base::Sphere, d, {"z_1", "z_2", "z_3", "z_4"}, {}};
  for (std::size_t i = 2; i <= 4; ++i) {
    std::vector<int> images(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) images[static_cast<std::size_t>(k)] = (k + a[i - 1]) % d;
    spec.monodromy.emplace(alpha_key(i), Permutation(images));
  }
  return spec;
}

CoverSpec build_double_cover(int n) {
  if (n < 2) throw DomainError("double cover needs at least two branch points (n >= 2)");
  if (n % 2 != 0) throw DomainError("parity: the double cover needs an even number of branch points, got n = " + std::to_string(n));
  CoverSpec spec{Base::Torus, 2, {}, {}};
  for (int i = 1; i <= n; ++i) spec.punctures.push_back("p_" + std::to_string(i));
  const Permutation swap({1, 0});
  spec.monodromy.emplace("m", Permutation::identity(2));
  spec.monodromy.emplace("p", Permutation::identity(2));
  for (int i = 2; i <= n; ++i) spec.monodromy.emplace(alpha_key(static_cast<std::size_t>(i)), swap);
  validate(spec);
  return spec;
}

LeafGrowth leaf_genus_growth(int d, const std::vector<LocalRamification>& per_point, int k) {
  if (d < 2) throw DomainError("a degree-" + std::to_string(d) + " cover has no branch points with index >= 2");
  if (k < 1) throw DomainError("number of branch points k must be positive");
  if (per_point.empty()) throw DomainError("empty ramification data");
  if (per_point.size() != 1 && per_point.size() < static_cast<std::size_t>(k))
    throw DomainError("ramification data given for fewer than k branch points");
  LeafGrowth out{{}, static_cast<long>(d) - k};
  long chi = d;  // d copies of a disk
  for (int i = 0; i < k; ++i) {
    const auto& r = per_point.size() == 1 ? per_point[0] : per_point[static_cast<std::size_t>(i)];
    if (r.index < 2) throw DomainError("ramification index " + std::to_string(r.index) + " < 2 is not a branch point");
    if (r.count < 1 || static_cast<long>(r.count) * r.index > d)
      throw DomainError("ramification data (" + std::to_string(r.count) + ", " + std::to_string(r.index) +
                        ") does not fit in degree " + std::to_string(d));
    chi -= static_cast<long>(r.count) * (r.index - 1);
    out.chi.push_back(chi);
  }
  for (std::size_t i = 0; i < out.chi.size(); ++i) {
    if (i > 0 && out.chi[i] >= out.chi[i - 1]) throw DomainError("internal: leaf Euler characteristic not decreasing");
    if (out.chi[i] > static_cast<long>(d) - static_cast<long>(i + 1))
      throw DomainError("internal: leaf Euler characteristic exceeds d - k");
  }
  return out;
}

}  // namespace minfol::cover
