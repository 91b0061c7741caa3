#include "minfol/holonomy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "minfol/error.hpp"

namespace minfol::holonomy {

namespace {

constexpr double kPi = std::numbers::pi;

double frac(double t) {
  double f = t - std::floor(t);
  return f >= 1.0 ? 0.0 : f;
}

double parse_real(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw DomainError("malformed number '" + s + "' in " + what);
  }
  if (used != s.size() || !std::isfinite(v)) throw DomainError("malformed number '" + s + "' in " + what);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
  }
  return out;
}

double mobius_lift(const Mobius& m0, double t) {
  Mobius m = m0;
  if (m.a + m.d < 0) m = {-m.a, -m.b, -m.c, -m.d};
  const double psi = kPi * (t - 0.5);
  const double vx = std::sin(psi), vy = std::cos(psi);
  const double wx = m.a * vx + m.b * vy, wy = m.c * vx + m.d * vy;
  // Full angle of w minus full angle of v, brought into (-pi, pi].
  double delta = std::atan2(wx, wy) - std::atan2(vx, vy);
  delta = std::remainder(delta, 2 * kPi);
  if (delta <= -kPi) delta += 2 * kPi;
  return t + delta / kPi;
}

double pow2(long k) { return std::ldexp(1.0, static_cast<int>(k)); }

}  // namespace

Mobius make_mobius(double a, double b, double c, double d) {
  const double det = a * d - b * c;
  if (!(det > 0)) throw DomainError("Mobius matrix must have positive determinant");
  const double s = std::sqrt(det);
  Mobius m{a / s, b / s, c / s, d / s};
  if (std::abs(m.a * m.d - m.b * m.c - 1.0) > kDetTolerance)
    throw DomainError("Mobius matrix could not be normalised to determinant one");
  return m;
}

Mobius elliptic(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return {c, s, -s, c};
}

Mobius operator*(const Mobius& x, const Mobius& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mobius inverse(const Mobius& m) { return {m.d, -m.b, -m.c, m.a}; }

CircleGen parse_gen(const std::string& text) {
  const std::string what = "generator '" + text + "'";
  if (text == "dbl") return Doubling{};
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw DomainError("unknown " + what);
  const std::string kind = text.substr(0, colon), body = text.substr(colon + 1);
  if (kind == "rot") return Rotation{parse_real(body, what)};
  if (kind == "mob") {
    const auto parts = split(body, ',');
    if (parts.size() != 4) throw DomainError(what + " needs four entries");
    return make_mobius(parse_real(parts[0], what), parse_real(parts[1], what), parse_real(parts[2], what),
                       parse_real(parts[3], what));
  }
  if (kind == "aff") {
    AffineLine f{0, 0.0};
    bool have_k = false;
    for (const auto& kv : split(body, ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw DomainError("expected key=value in " + what);
      const std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
      if (key == "k") {
        const double k = parse_real(val, what);
        if (k != std::floor(k) || std::abs(k) > 1000) throw DomainError("exponent k must be a small integer in " + what);
        f.k = static_cast<long>(k);
        have_k = true;
      } else if (key == "b") {
        f.b = parse_real(val, what);
      } else {
        throw DomainError("unknown key '" + key + "' in " + what);
      }
    }
    if (!have_k) throw DomainError("missing k in " + what);
    return f;
  }
  throw DomainError("unknown " + what);
}

std::vector<CircleGen> parse_gens(const std::string& text) {
  std::vector<CircleGen> out;
  for (const auto& part : split(text, ';'))
    if (!part.empty()) out.push_back(parse_gen(part));
  return out;
}

std::string to_string(const CircleGen& g) {
  std::ostringstream os;
  os.precision(17);
  std::visit(
      [&](const auto& x) {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, Rotation>) os << "rot:" << x.angle;
        else if constexpr (std::is_same_v<X, Doubling>) os << "dbl";
        else if constexpr (std::is_same_v<X, Mobius>) os << "mob:" << x.a << ',' << x.b << ',' << x.c << ',' << x.d;
        else os << "aff:k=" << x.k << ",b=" << x.b;
      },
      g);
  return os.str();
}

double lift(const CircleGen& g, double t) {
  return std::visit(
      [t](const auto& x) -> double {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, Rotation>) return t + x.angle;
        else if constexpr (std::is_same_v<X, Doubling>) return 2 * t;
        else if constexpr (std::is_same_v<X, Mobius>) return mobius_lift(x, t);
        else {
          if (x.k < 0) throw DomainError("affine map with k < 0 does not descend to the circle");
          return pow2(x.k) * t + x.b;
        }
      },
      g);
}

double apply_circle(const CircleGen& g, double t) { return frac(lift(g, t)); }

std::uint64_t Lcg::next() {
  state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
  return state_;
}

std::size_t Lcg::index(std::size_t m) {
  const std::uint64_t hi = next() >> 32;
  return static_cast<std::size_t>((hi * static_cast<std::uint64_t>(m)) >> 32);
}

OrbitStats orbit_density(const std::vector<CircleGen>& gens, double start, long n, double epsilon,
                         std::uint64_t seed) {
  if (gens.empty()) throw DomainError("orbit_density: empty generator list");
  if (n < 1) throw DomainError("orbit_density: n must be at least 1");
  if (!(epsilon > 0 && epsilon < 1)) throw DomainError("orbit_density: epsilon must lie in (0, 1)");
  for (const auto& g : gens)
    if (const auto* f = std::get_if<AffineLine>(&g); f && f->k < 0)
      throw DomainError("orbit_density: affine generators need k >= 0 to act on the circle");
  Lcg rng(seed);
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(n));
  double x = frac(start);
  pts.push_back(x);
  for (long j = 1; j < n; ++j) {
    x = apply_circle(gens[rng.index(gens.size())], x);
    pts.push_back(x);
  }
  std::sort(pts.begin(), pts.end());
  double gap = pts.front() + 1.0 - pts.back();
  for (std::size_t j = 1; j < pts.size(); ++j) gap = std::max(gap, pts[j] - pts[j - 1]);
  return {n, gap, gap < epsilon, epsilon};
}

std::vector<OrbitStats> orbit_density_batch(const std::vector<CircleGen>& gens, const std::vector<OrbitCell>& cells,
                                            long n, double epsilon, unsigned threads) {
  std::vector<OrbitStats> out(cells.size());
  if (cells.empty()) return out;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cells.size())));
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < cells.size(); i += threads)
          out[i] = orbit_density(gens, cells[i].start, n, epsilon, cells[i].seed);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::string PseudogroupWord::to_string() const {
  if (letters.empty()) return "id";
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ' ';
    s += "g" + std::to_string(letters[i] / 2 + 1);
    if (letters[i] % 2) s += "^-1";
  }
  return s;
}

AffineLine compose(const AffineLine& f, const AffineLine& g) { return {f.k + g.k, pow2(f.k) * g.b + f.b}; }

AffineLine inverse(const AffineLine& f) { return {-f.k, -f.b / pow2(f.k)}; }

AffineLine evaluate(const PseudogroupWord& w, const std::vector<AffineLine>& gens) {
  AffineLine m{0, 0.0};
  for (int l : w.letters) {
    const AffineLine& g = gens.at(static_cast<std::size_t>(l / 2));
    m = compose(l % 2 ? inverse(g) : g, m);
  }
  return m;
}

StabilizerResult stabilizer_search(const std::vector<AffineLine>& gens, double x, int max_len) {
  if (max_len < 1) throw DomainError("stabilizer_search: max_len must be at least 1");
  const int letters = 2 * static_cast<int>(gens.size());
  std::vector<AffineLine> letter_map;
  for (const auto& g : gens) {
    letter_map.push_back(g);
    letter_map.push_back(inverse(g));
  }
  StabilizerResult res;
  // Breadth-first over reduced words, so witnesses arrive in shortlex order.
  struct Node {
    std::vector<int> word;
    AffineLine map;
  };
  std::vector<Node> level{{{}, {0, 0.0}}};
  for (int len = 1; len <= max_len && !level.empty(); ++len) {
    std::vector<Node> next;
    for (const auto& node : level)
      for (int l = 0; l < letters; ++l) {
        if (!node.word.empty() && (node.word.back() ^ 1) == l) continue;
        Node child{node.word, compose(letter_map[static_cast<std::size_t>(l)], node.map)};
        child.word.push_back(l);
        const bool identity = child.map.k == 0 && std::abs(child.map.b) < 1e-12;
        const double residual = std::abs(pow2(child.map.k) * x + child.map.b - x);
        if (!identity && residual < kFixedTolerance)
          res.witnesses.push_back({{child.word}, child.map, residual});
        next.push_back(std::move(child));
      }
    level = std::move(next);
  }
  if (res.witnesses.empty()) return res;

  for (std::size_t i = 0; i < res.witnesses.size(); ++i)
    for (std::size_t j = i + 1; j < res.witnesses.size(); ++j) {
      const auto& p = res.witnesses[i].map;
      const auto& q = res.witnesses[j].map;
      if (p.k == q.k && std::abs(p.b - q.b) > 1e-8 * std::max(1.0, std::abs(p.b)))
        throw std::logic_error("stabilizer_search: two witnesses share the linear part but not the translation");
    }

  const StabilizerWitness* best = nullptr;
  for (const auto& w : res.witnesses) {
    if (w.map.k == 0) continue;
    if (!best || std::abs(w.map.k) < std::abs(best->map.k) ||
        (std::abs(w.map.k) == std::abs(best->map.k) && w.map.k > 0 && best->map.k < 0))
      best = &w;
  }
  if (!best) {
    // Only translations fix x, which forces them to be the identity up to tolerance.
    res.structure = StabilizerStructure::Counterexample;
    res.counterexample = res.witnesses.front();
    return res;
  }
  res.primitive = *best;
  const long k0 = best->map.k;
  const double b0 = best->map.b;
  res.closed_form_fixed_point = b0 / (1.0 - pow2(k0));
  res.structure = StabilizerStructure::CyclicEvidence;
  for (const auto& w : res.witnesses) {
    bool power = w.map.k % k0 == 0;
    if (power) {
      const long n = w.map.k / k0;
      // P^n = (n k0, b0 (2^{n k0} - 1) / (2^{k0} - 1)).
      const double expect = b0 * (pow2(n * k0) - 1.0) / (pow2(k0) - 1.0);
      power = std::abs(expect - w.map.b) <= 1e-8 * std::max(1.0, std::abs(expect));
    }
    if (!power) {
      res.structure = StabilizerStructure::Counterexample;
      res.counterexample = w;
      break;
    }
  }
  return res;
}

RotationNumber rotation_number(const std::vector<CircleGen>& word, long n) {
  if (n < 100) throw DomainError("rotation_number: n must be at least 100");
  if (word.empty()) throw DomainError("rotation_number: empty word");
  for (const auto& g : word) {
    if (std::holds_alternative<Doubling>(g)) throw DomainError("rotation_number: the doubling map has no rotation number");
    if (const auto* f = std::get_if<AffineLine>(&g); f && f->k != 0)
      throw DomainError("rotation_number: affine maps with k != 0 are not circle homeomorphisms");
  }
  double t = 0.0;
  for (long j = 0; j < n; ++j)
    for (const auto& g : word) t = lift(g, t);
  return {t / static_cast<double>(n), 1.0 / static_cast<double>(n)};
}

double circle_distance(double s, double t) {
  const double d = frac(s - t);
  return std::min(d, 1.0 - d);
}

CommutatorCheck verify_commutator_product(const std::vector<std::pair<Mobius, Mobius>>& pairs, double target_angle) {
  Mobius prod{1, 0, 0, 1};
  bool det_ok = true;
  for (const auto& [f, h] : pairs) {
    for (const Mobius* m : {&f, &h})
      if (std::abs(m->a * m->d - m->b * m->c - 1.0) > kDetTolerance) det_ok = false;
    prod = prod * (f * h * inverse(f) * inverse(h));
  }
  double dev = 0.0;
  constexpr int kGrid = 1024;
  for (int j = 0; j < kGrid; ++j) {
    const double t = static_cast<double>(j) / kGrid;
    dev = std::max(dev, circle_distance(apply_circle(prod, t), t + target_angle));
  }
  return {dev, det_ok && dev < kDeviationTolerance, det_ok};
}

}  // namespace minfol::holonomy
