#include "minfol/cli.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "minfol/cover.hpp"
#include "minfol/error.hpp"
#include "minfol/holonomy.hpp"
#include "minfol/homology.hpp"
#include "minfol/origami.hpp"
#include "minfol/sl2z.hpp"
#include "minfol/torus3.hpp"

namespace minfol::cli {

using report::Json;

namespace {

// Malformed arguments: reported as usage errors (exit 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto parse_arg(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw UsageError(what + ": " + e.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

long parse_long(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw UsageError(what + ": expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw UsageError(what + ": expected an integer, got '" + s + "'");
  return v;
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  for (const auto& part : split(s, ',')) out.push_back(static_cast<int>(parse_long(part, what)));
  if (out.empty()) throw UsageError(what + ": empty list");
  return out;
}

Rational parse_rational(const std::string& s, const std::string& what) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_long(s, what));
  const long den = parse_long(s.substr(slash + 1), what);
  if (den == 0) throw UsageError(what + ": zero denominator");
  return Rational(parse_long(s.substr(0, slash), what), den);
}

// "r11 r12 ...; r21 r22 ..." -> integer matrix.
IntMatrix parse_int_matrix(const std::string& s, const std::string& what) {
  std::vector<std::vector<Int>> rows;
  for (const auto& row : split(s, ';')) {
    std::vector<Int> r;
    std::string cleaned = row;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream in(cleaned);
    std::string tok;
    while (in >> tok) r.push_back(parse_long(tok, what));
    if (!rows.empty() && r.size() != rows.front().size()) throw UsageError(what + ": ragged matrix");
    rows.push_back(std::move(r));
  }
  if (rows.empty() || rows.front().empty()) throw UsageError(what + ": empty matrix");
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

sl2z::IntMatrix2 parse_sl2(const std::string& s) {
  return parse_arg("--matrix", [&] { return sl2z::parse_matrix(s); });
}

std::vector<sl2z::Token> parse_word(const std::string& s) {
  std::vector<sl2z::Token> out;
  std::string cleaned = s;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) out.push_back(parse_arg("--word", [&] { return sl2z::parse_token(tok); }));
  return out;
}

Json word_json(const std::vector<sl2z::Token>& w) {
  Json a = Json::array();
  for (auto t : w) a.push_back(sl2z::token_name(t));
  return a;
}

Json matrix2_json(const sl2z::IntMatrix2& A) { return Json::array({Json::array({A.a, A.b}), Json::array({A.c, A.d})}); }

Json one_based(const Permutation& p) {
  Json a = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) a.push_back(p(static_cast<int>(i)) + 1);
  return a;
}

Json origami_json(const origami::Origami& o) {
  return {{"degree", o.degree()},
          {"right", report::cycles_json(o.right())},
          {"up", report::cycles_json(o.up())},
          {"genus", o.genus()},
          {"num_vertices", o.num_vertices()},
          {"stratum_2pi_multiples", o.stratum()},
          {"vertex_permutation", report::cycles_json(o.vertex_permutation())}};
}

struct OrigamiArgs {
  std::string name, right, up;
  long degree = 0;

  void attach(CLI::App* app) {
    app->add_option("--origami", name, "built-in origami: torus | wollmilchsau");
    app->add_option("--right", right, "right-neighbour permutation in 1-based cycle notation");
    app->add_option("--up", up, "up-neighbour permutation in 1-based cycle notation");
    app->add_option("--degree", degree, "number of squares (default: largest label)");
  }

  origami::Origami get() const {
    if (!name.empty()) {
      if (!right.empty() || !up.empty()) throw UsageError("give either --origami or --right/--up, not both");
      auto o = origami::named(name);
      if (!o) throw UsageError("unknown origami '" + name + "' (known: torus, wollmilchsau)");
      return *o;
    }
    if (right.empty() || up.empty()) throw UsageError("an origami needs --origami NAME or both --right and --up");
    const auto h = parse_arg("--right", [&] { return Permutation::parse(right); });
    const auto v = parse_arg("--up", [&] { return Permutation::parse(up); });
    std::size_t n = std::max(h.size(), v.size());
    if (degree > 0) {
      if (static_cast<std::size_t>(degree) < n) throw UsageError("--degree is smaller than the largest label");
      n = static_cast<std::size_t>(degree);
    }
    if (n == 0) n = 1;
    const auto hn = parse_arg("--right", [&] { return Permutation::parse(right, n); });
    const auto vn = parse_arg("--up", [&] { return Permutation::parse(up, n); });
    return origami::Origami(hn, vn);  // connectivity is a domain question
  }

  Json inputs() const {
    if (!name.empty()) return {{"origami", name}};
    Json j = {{"right", right}, {"up", up}};
    if (degree > 0) j["degree"] = degree;
    return j;
  }
};

// ---------------------------------------------------------------- classify

Json classify_results(const sl2z::IntMatrix2& A) {
  Json r = {{"matrix", matrix2_json(A)}, {"trace", A.trace()}, {"exact", true}};
  const auto cls = sl2z::classify(A);
  if (const auto* p = std::get_if<sl2z::Periodic>(&cls)) {
    r["class"] = "Periodic";
    r["order"] = p->order;
  } else if (const auto* q = std::get_if<sl2z::Parabolic>(&cls)) {
    r["class"] = "Parabolic";
    r["normal_form"] = {{"n", q->n}, {"sign", q->sign}, {"conjugator", matrix2_json(q->conjugator)}};
  } else {
    const auto& an = std::get<sl2z::Anosov>(cls);
    r["class"] = "Anosov";
    r["sign"] = an.sign;
    r["lambda"] = report::to_json(an.lambda);
    r["lambda_inverse"] = report::to_json(an.lambda_inverse);
    r["lambda_plus_inverse"] = report::to_json(an.lambda + an.lambda_inverse);
    r["unstable_slope"] = report::to_json(an.unstable_slope);
    r["stable_slope"] = report::to_json(an.stable_slope);
  }
  return r;
}

Json periodic_json(const sl2z::IntMatrix2& A, unsigned n) {
  const auto pp = sl2z::periodic_points(A, n);
  Json pts = Json::array();
  for (const auto& [x, y] : pp.points) pts.push_back(Json::array({report::to_json(x), report::to_json(y)}));
  return {{"n", n}, {"count", pp.count}, {"points", pts}};
}

Json decompose_json(const sl2z::IntMatrix2& A) {
  const auto w = sl2z::decompose_st(A);
  return {{"word", word_json(w)}, {"product_matches", sl2z::word_product(w) == A}};
}

// ---------------------------------------------------------------- cover

Json profile_json(const cover::RamificationProfile& p) {
  Json pts = Json::array();
  for (const auto& b : p.branch_points) pts.push_back({{"label", b.label}, {"fibre", b.fibre}});
  return {{"degree", p.degree}, {"branch_points", pts}};
}

Json cover_spec_json(const cover::CoverSpec& s) {
  Json mono = Json::object();
  for (const auto& [k, v] : s.monodromy) mono[k] = {{"cycles", report::cycles_json(v)}, {"images", one_based(v)}};
  mono["alpha_1"] = {{"cycles", report::cycles_json(cover::alpha_one(s))}, {"images", one_based(cover::alpha_one(s))}};
  return {{"base", cover::base_name(s.base)}, {"degree", s.degree}, {"punctures", s.punctures}, {"monodromy", mono}};
}

std::vector<cover::LocalRamification> parse_profile(const std::string& s) {
  std::vector<cover::LocalRamification> out;
  for (const auto& part : split(s, ';')) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw UsageError("--profile: expected count:index entries, got '" + part + "'");
    out.push_back({static_cast<int>(parse_long(part.substr(0, colon), "--profile")),
                   static_cast<int>(parse_long(part.substr(colon + 1), "--profile"))});
  }
  if (out.empty()) throw UsageError("--profile: empty list");
  return out;
}

Json growth_json(const cover::LeafGrowth& g, int d) {
  bool decreasing = true, bounded = true;
  for (std::size_t i = 0; i < g.chi.size(); ++i) {
    if (i > 0 && g.chi[i] >= g.chi[i - 1]) decreasing = false;
    if (g.chi[i] > d - static_cast<long>(i + 1)) bounded = false;
  }
  return {{"chi", g.chi}, {"bound", g.bound}, {"strictly_decreasing", decreasing}, {"within_bound", bounded}};
}

// ---------------------------------------------------------------- homology

Json chain_json(const homology::Chain& c) { return c; }

Json action_json(const homology::HomologyAction& a) {
  return {{"matrix", report::to_json(a.M)},
          {"intersection_form", report::to_json(a.basis.intersection)},
          {"rank", a.basis.rank},
          {"k", a.k},
          {"b1", a.b1},
          {"symplectic", a.symplectic},
          {"fixed_basis", a.fixed_basis},
          {"fixed_in_projection_kernel", a.fixed_in_projection_kernel}};
}

Json witness_json(const origami::LiftWitness& w, const origami::Origami& o) {
  return {{"word", word_json(w.word)},
          {"relabeling", one_based(w.relabeling)},
          {"verified", origami::verify(w, o)}};
}

// ---------------------------------------------------------------- torus3

torus3::MonodromyClass parse_class(const std::string& s) {
  if (s == "Periodic" || s == "periodic") return torus3::MonodromyClass::Periodic;
  if (s == "Reducible" || s == "reducible") return torus3::MonodromyClass::Reducible;
  if (s == "Anosov" || s == "anosov") return torus3::MonodromyClass::Anosov;
  if (s == "PseudoAnosov" || s == "pseudo-anosov" || s == "pA") return torus3::MonodromyClass::PseudoAnosov;
  throw UsageError("--class: expected Periodic, Reducible, Anosov or PseudoAnosov, got '" + s + "'");
}

Json geometry_json(const torus3::GeometryReport& g) {
  Json j = {{"geometry", torus3::geometry_name(g.geometry)}};
  j["note"] = g.note ? Json(*g.note) : Json(nullptr);
  return j;
}

Json euler_json(const torus3::EulerReport& e, long g, long euler) {
  return {{"base_genus", g},
          {"euler_class", euler},
          {"abs_euler_class", e.abs_euler},
          {"milnor_wood_bound", 2 * g - 2},
          {"geometry", torus3::geometry_name(e.geometry)},
          {"milnor_wood_ok", e.milnor_wood_ok},
          {"transverse_to_fibration_possible", e.transverse_to_fibration_possible},
          {"borderline_discrete_faithful", e.borderline}};
}

torus3::MonodromySummary summary_from_action(long genus, const sl2z::IntMatrix2& A, std::size_t k) {
  torus3::MonodromySummary m;
  m.genus = genus;
  const auto cls = sl2z::classify(A);
  if (genus == 1) {
    m = torus3::summarize(A);
    return m;
  }
  // An affine lift of a hyperbolic matrix is pseudo-Anosov with the same stretch factor.
  if (const auto* an = std::get_if<sl2z::Anosov>(&cls)) {
    m.kind = torus3::MonodromyClass::PseudoAnosov;
    m.lambda = an->lambda;
  } else {
    throw DomainError("the lifted monodromy is classified only for Anosov matrices");
  }
  m.torelli_k = static_cast<long>(k);
  return m;
}

// ---------------------------------------------------------------- holonomy

Json gen_list_json(const std::vector<holonomy::CircleGen>& gens) {
  Json a = Json::array();
  for (const auto& g : gens) a.push_back(holonomy::to_string(g));
  return a;
}

Json orbit_json(const holonomy::OrbitStats& s) {
  return {{"n_steps", s.n_steps}, {"max_gap", s.max_gap}, {"epsilon", s.epsilon},
          {"epsilon_dense", s.epsilon_dense}, {"units", "turns (R/Z)"}};
}

Json stab_witness_json(const holonomy::StabilizerWitness& w) {
  return {{"word", w.word.to_string()}, {"k", w.map.k}, {"b", w.map.b}, {"residual", w.residual}};
}

std::string structure_name(holonomy::StabilizerStructure s) {
  switch (s) {
    case holonomy::StabilizerStructure::Trivial: return "Trivial";
    case holonomy::StabilizerStructure::CyclicEvidence: return "CyclicEvidence";
    case holonomy::StabilizerStructure::Counterexample: return "Counterexample";
  }
  return "?";
}

std::vector<holonomy::AffineLine> affine_only(const std::vector<holonomy::CircleGen>& gens) {
  std::vector<holonomy::AffineLine> out;
  for (const auto& g : gens) {
    const auto* f = std::get_if<holonomy::AffineLine>(&g);
    if (!f) throw UsageError("--gens: stabilizer search takes affine generators (aff:k=..,b=..) only");
    out.push_back(*f);
  }
  return out;
}

std::vector<holonomy::CircleGen> parse_gens(const std::string& s) {
  return parse_arg("--gens", [&] { return holonomy::parse_gens(s); });
}

double parse_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError(what + ": expected a number, got '" + s + "'");
  }
  if (used != s.size()) throw UsageError(what + ": expected a number, got '" + s + "'");
  return v;
}

}  // namespace

Json pipeline_frw(const std::string& matrix, const std::string& origami_name) {
  const auto A = parse_sl2(matrix);
  const auto o = origami::named(origami_name);
  if (!o) throw UsageError("unknown origami '" + origami_name + "' (known: torus, wollmilchsau)");
  Json results;
  results["exact"] = true;
  results["classify"] = classify_results(A);
  if (!sl2z::is_anosov(A)) throw DomainError("pipeline frw needs an Anosov matrix (|trace| > 2)");
  results["origami"] = origami_json(*o);
  const auto w = origami::lift_automorphism(A, *o);
  if (!w) throw DomainError("the matrix does not lift to an affine automorphism of " + origami_name);
  results["lift"] = witness_json(*w, *o);
  const auto act = homology::induced_action(*w, *o);
  results["homology_action"] = action_json(act);
  const auto torelli = homology::torelli_order(act.M, act.basis.intersection);
  results["torelli"] = {{"k", torelli.k}, {"b1", torelli.b1}, {"symplectic", torelli.symplectic},
                        {"k_at_most_2g_minus_2", static_cast<long>(torelli.k) <= 2 * o->genus() - 2}};
  const auto summary = summary_from_action(o->genus(), A, torelli.k);
  results["mapping_torus"] = geometry_json(torus3::geometry_classify(summary));
  results["mapping_torus"]["monodromy_class"] = torus3::class_name(summary.kind);
  results["mapping_torus"]["b1"] = *summary.b1();
  // One branch point on the torus; its fibre is the cycle type of the vertex permutation.
  const auto fibre = o->vertex_permutation().cycle_type();
  int count = 0, index = 0;
  for (int e : fibre) {
    if (e < 2) continue;
    if (index != 0 && e != index) throw DomainError("leaf growth needs a uniform ramification index");
    index = e;
    ++count;
  }
  if (index == 0) {
    results["leaf_growth"] = nullptr;
  } else {
    const int d = static_cast<int>(o->degree());
    const int k = 10;
    results["leaf_growth"] = growth_json(cover::leaf_genus_growth(d, {{count, index}}, k), d);
    results["leaf_growth"]["d"] = d;
    results["leaf_growth"]["per_point"] = {{"count", count}, {"index", index}};
    results["leaf_growth"]["k"] = k;
  }
  return report::make("pipeline frw", {{"matrix", matrix}, {"origami", origami_name}}, results);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"minfol: monodromy, branched covers, square-tiled surfaces, homology actions and holonomy"};
  app.name("minfol");
  app.fallthrough();
  app.require_subcommand(1);
  bool tsv = false;
  app.add_flag("--tsv", tsv, "emit tab-separated path/value lines instead of JSON");
  app.add_flag("--json", "emit JSON (default)");
  std::function<Json()> action;

  // classify
  auto* classify = app.add_subcommand("classify", "trace class, stretch factor, periodic points, S/T word");
  std::string c_matrix;
  unsigned c_periodic = 0;
  bool c_decompose = false;
  classify->add_option("--matrix", c_matrix, "\"a b c d\" with ad - bc = 1")->required();
  classify->add_option("--periodic", c_periodic, "list the points of period dividing N");
  classify->add_flag("--decompose", c_decompose, "factor into S, T, T^-1, -I");
  classify->callback([&] {
    action = [&] {
      const auto A = parse_sl2(c_matrix);
      Json r = classify_results(A);
      Json in = {{"matrix", c_matrix}};
      if (c_periodic > 0) {
        r["periodic_points"] = periodic_json(A, c_periodic);
        in["periodic"] = c_periodic;
      }
      if (c_decompose) {
        r["decomposition"] = decompose_json(A);
        in["decompose"] = true;
      }
      return report::make("classify", in, r);
    };
  });

  // origami
  auto* ori = app.add_subcommand("origami", "square-tiled surfaces");
  ori->require_subcommand(1);
  OrigamiArgs o_build, o_act, o_lift;
  auto* o_build_cmd = ori->add_subcommand("build", "genus, stratum and vertex data");
  o_build.attach(o_build_cmd);
  o_build_cmd->callback([&] {
    action = [&] {
      const auto o = o_build.get();
      Json r = origami_json(o);
      r["canonical"] = origami_json(origami::canonical_form(o));
      r["exact"] = true;
      return report::make("origami build", o_build.inputs(), r);
    };
  });
  auto* o_act_cmd = ori->add_subcommand("act", "apply an SL(2,Z) word (last token acts first)");
  o_act.attach(o_act_cmd);
  std::string o_word;
  o_act_cmd->add_option("--word", o_word, "tokens S, T, T^-1, -I separated by spaces")->required();
  o_act_cmd->callback([&] {
    action = [&] {
      const auto o = o_act.get();
      const auto w = parse_word(o_word);
      const auto img = origami::act(w, o);
      Json r = {{"image", origami_json(img)}, {"isomorphic_to_input", origami::isomorphic(o, img)}, {"exact", true}};
      Json in = o_act.inputs();
      in["word"] = o_word;
      return report::make("origami act", in, r);
    };
  });
  auto* o_lift_cmd = ori->add_subcommand("lift", "affine lift of a hyperbolic matrix");
  o_lift.attach(o_lift_cmd);
  std::string o_matrix;
  o_lift_cmd->add_option("--matrix", o_matrix, "\"a b c d\"")->required();
  o_lift_cmd->callback([&] {
    action = [&] {
      const auto o = o_lift.get();
      const auto A = parse_sl2(o_matrix);
      const auto w = origami::lift_automorphism(A, o);
      Json r = {{"lifts", w.has_value()}, {"exact", true}};
      r["witness"] = w ? witness_json(*w, o) : Json(nullptr);
      Json in = o_lift.inputs();
      in["matrix"] = o_matrix;
      return report::make("origami lift", in, r);
    };
  });

  // cover
  auto* cov = app.add_subcommand("cover", "branched covers and Riemann-Hurwitz");
  cov->require_subcommand(1);
  int p_d = 0;
  std::string p_a;
  auto* pill = cov->add_subcommand("pillowcase", "cyclic cover w^d = prod (z - z_i)^a_i of the pillowcase");
  pill->add_option("--d", p_d, "degree")->required();
  pill->add_option("--a", p_a, "four exponents a1,a2,a3,a4")->required();
  pill->callback([&] {
    action = [&] {
      const auto a = parse_int_list(p_a, "--a");
      const auto res = cover::pillowcase_genus(p_d, a);
      Json r = {{"genus", res.genus}, {"sphere_profile", profile_json(res.sphere_profile)}, {"exact", true}};
      r["torus_profile"] = res.torus_profile ? profile_json(*res.torus_profile) : Json(nullptr);
      return report::make("cover pillowcase", {{"d", p_d}, {"a", a}}, r);
    };
  });
  int dbl_n = 0;
  auto* dbl = cov->add_subcommand("double", "double cover of the torus branched at n points");
  dbl->add_option("--n", dbl_n, "number of branch points (even)")->required();
  dbl->callback([&] {
    action = [&] {
      const auto spec = cover::build_double_cover(dbl_n);
      Json r = {{"cover", cover_spec_json(spec)},
                {"profile", profile_json(cover::profile_of(spec))},
                {"genus", cover::genus_of(spec)},
                {"transitive", cover::is_transitive(spec)},
                {"exact", true}};
      return report::make("cover double", {{"n", dbl_n}}, r);
    };
  });
  int g_d = 0, g_k = 0;
  std::string g_profile;
  auto* growth = cov->add_subcommand("growth", "Euler characteristics of lifted disks");
  growth->add_option("--d", g_d, "degree")->required();
  growth->add_option("--profile", g_profile, "count:index per branch point, ';'-separated (one entry is reused)")
      ->required();
  growth->add_option("--k", g_k, "number of branch points")->required();
  growth->callback([&] {
    action = [&] {
      const auto prof = parse_profile(g_profile);
      Json r = growth_json(cover::leaf_genus_growth(g_d, prof, g_k), g_d);
      r["exact"] = true;
      return report::make("cover growth", {{"d", g_d}, {"profile", g_profile}, {"k", g_k}}, r);
    };
  });
  int rh_degree = 0;
  std::string rh_base = "torus";
  std::vector<std::string> rh_fibres;
  auto* rh = cov->add_subcommand("rh", "Riemann-Hurwitz from a ramification profile");
  rh->add_option("--degree", rh_degree, "degree")->required();
  rh->add_option("--base", rh_base, "torus | sphere");
  rh->add_option("--fibre", rh_fibres, "ramification indices over one branch point, e.g. 2,2,1 (repeatable)");
  rh->callback([&] {
    action = [&] {
      if (rh_base != "torus" && rh_base != "sphere") throw UsageError("--base: expected torus or sphere");
      cover::RamificationProfile prof{rh_degree, {}};
      int label = 1;
      for (const auto& f : rh_fibres) {
        auto fib = parse_int_list(f, "--fibre");
        std::sort(fib.rbegin(), fib.rend());
        prof.branch_points.push_back({"p" + std::to_string(label++), fib});
      }
      cover::validate(prof);
      const long chi = cover::riemann_hurwitz_chi(rh_base == "torus" ? 0 : 2, prof);
      Json r = {{"chi", chi}, {"genus", cover::genus_from_chi(chi)}, {"profile", profile_json(prof)}, {"exact", true}};
      return report::make("cover rh", {{"degree", rh_degree}, {"base", rh_base}, {"fibres", rh_fibres}}, r);
    };
  });
  std::string mono_base = "torus", mono_m, mono_p;
  int mono_degree = 0;
  std::vector<std::string> mono_alpha;
  auto* mono = cov->add_subcommand("monodromy", "genus and profile of a permutation-monodromy cover");
  mono->add_option("--base", mono_base, "torus | sphere");
  mono->add_option("--degree", mono_degree, "degree")->required();
  mono->add_option("--m", mono_m, "image of the meridian (torus)");
  mono->add_option("--p", mono_p, "image of the longitude (torus)");
  mono->add_option("--alpha", mono_alpha, "images of alpha_2..alpha_n (repeatable)");
  mono->callback([&] {
    action = [&] {
      if (mono_degree < 1) throw UsageError("--degree must be positive");
      cover::CoverSpec spec;
      spec.degree = mono_degree;
      const auto n = static_cast<std::size_t>(mono_degree);
      if (mono_base == "torus") {
        spec.base = cover::Base::Torus;
        spec.monodromy["m"] = parse_arg("--m", [&] { return Permutation::parse(mono_m.empty() ? "()" : mono_m, n); });
        spec.monodromy["p"] = parse_arg("--p", [&] { return Permutation::parse(mono_p.empty() ? "()" : mono_p, n); });
      } else if (mono_base == "sphere") {
        spec.base = cover::Base::Sphere;
      } else {
        throw UsageError("--base: expected torus or sphere");
      }
      spec.punctures.push_back("p1");
      for (std::size_t i = 0; i < mono_alpha.size(); ++i) {
        spec.punctures.push_back("p" + std::to_string(i + 2));
        spec.monodromy["alpha_" + std::to_string(i + 2)] =
            parse_arg("--alpha", [&] { return Permutation::parse(mono_alpha[i], n); });
      }
      cover::validate(spec);
      Json r = {{"cover", cover_spec_json(spec)},
                {"profile", profile_json(cover::profile_of(spec))},
                {"genus", cover::genus_of(spec)},
                {"exact", true}};
      Json in = {{"base", mono_base}, {"degree", mono_degree}, {"alpha", mono_alpha}};
      if (!mono_m.empty()) in["m"] = mono_m;
      if (!mono_p.empty()) in["p"] = mono_p;
      return report::make("cover monodromy", in, r);
    };
  });

  // homology
  auto* hom = app.add_subcommand("homology", "first homology and induced actions");
  hom->require_subcommand(1);
  OrigamiArgs h_basis_o, h_action_o;
  auto* h_basis = hom->add_subcommand("basis", "integral basis of H1 and the intersection form");
  h_basis_o.attach(h_basis);
  h_basis->callback([&] {
    action = [&] {
      const auto o = h_basis_o.get();
      const auto hb = homology::homology_basis(o);
      Json cycles = Json::array();
      for (const auto& c : hb.cycles) cycles.push_back(chain_json(c));
      Json r = {{"rank", hb.rank}, {"genus", o.genus()}, {"cycles", cycles},
                {"intersection_form", report::to_json(hb.intersection)},
                {"edge_numbering", "edge i: bottom of square i+1 (rightwards); edge d+i: left of square i+1 (upwards)"},
                {"exact", true}};
      return report::make("homology basis", h_basis_o.inputs(), r);
    };
  });
  auto* h_action = hom->add_subcommand("action", "matrix of the affine lift on H1");
  h_action_o.attach(h_action);
  std::string h_matrix;
  h_action->add_option("--matrix", h_matrix, "\"a b c d\"")->required();
  h_action->callback([&] {
    action = [&] {
      const auto o = h_action_o.get();
      const auto A = parse_sl2(h_matrix);
      const auto w = origami::lift_automorphism(A, o);
      if (!w) throw DomainError("the matrix does not lift to an affine automorphism of this origami");
      Json r = action_json(homology::induced_action(*w, o));
      r["lift"] = witness_json(*w, o);
      r["exact"] = true;
      Json in = h_action_o.inputs();
      in["matrix"] = h_matrix;
      return report::make("homology action", in, r);
    };
  });
  std::string t_M, t_J;
  auto* h_torelli = hom->add_subcommand("torelli", "dimension of the fixed subspace of M");
  h_torelli->add_option("--M", t_M, "matrix rows separated by ';'")->required();
  h_torelli->add_option("--J", t_J, "antisymmetric unimodular form (default: standard symplectic)");
  h_torelli->callback([&] {
    action = [&] {
      const IntMatrix M = parse_int_matrix(t_M, "--M");
      IntMatrix J;
      if (t_J.empty()) {
        if (!M.square() || M.rows() % 2) throw UsageError("--M must be square of even size when --J is omitted");
        const std::size_t g = M.rows() / 2;
        J = IntMatrix(M.rows(), M.rows());
        for (std::size_t i = 0; i < g; ++i) {
          J(i, g + i) = 1;
          J(g + i, i) = -1;
        }
      } else {
        J = parse_int_matrix(t_J, "--J");
      }
      const auto t = homology::torelli_order(M, J);
      Json r = {{"k", t.k}, {"b1", t.b1}, {"symplectic", t.symplectic}, {"exact", true}};
      Json in = {{"M", t_M}};
      if (!t_J.empty()) in["J"] = t_J;
      return report::make("homology torelli", in, r);
    };
  });

  // torus3
  auto* t3 = app.add_subcommand("torus3", "mapping tori and circle bundles");
  t3->require_subcommand(1);
  long geo_genus = 1;
  std::string geo_class, geo_matrix;
  long geo_k = -1;
  auto* geo = t3->add_subcommand("geometry", "geometry of a mapping torus from monodromy data");
  geo->add_option("--matrix", geo_matrix, "genus-one monodromy \"a b c d\" (class read from the trace)");
  geo->add_option("--genus", geo_genus, "fibre genus");
  geo->add_option("--class", geo_class, "Periodic | Reducible | Anosov | PseudoAnosov");
  geo->add_option("--torelli-k", geo_k, "dimension of the fixed subspace of the monodromy on H1");
  geo->callback([&] {
    action = [&] {
      torus3::MonodromySummary m;
      Json in;
      if (!geo_matrix.empty()) {
        m = torus3::summarize(parse_sl2(geo_matrix));
        in["matrix"] = geo_matrix;
      } else {
        if (geo_class.empty()) throw UsageError("give --matrix or --class");
        m.genus = geo_genus;
        m.kind = parse_class(geo_class);
        if (geo_k >= 0) m.torelli_k = geo_k;
        in = {{"genus", geo_genus}, {"class", geo_class}};
        if (geo_k >= 0) in["torelli_k"] = geo_k;
      }
      Json r = geometry_json(torus3::geometry_classify(m));
      r["genus"] = m.genus;
      r["monodromy_class"] = torus3::class_name(m.kind);
      r["b1"] = m.b1() ? Json(*m.b1()) : Json(nullptr);
      r["lambda"] = m.lambda ? report::to_json(*m.lambda) : Json(nullptr);
      r["exact"] = true;
      return report::make("torus3 geometry", in, r);
    };
  });
  long eu_genus = 0, eu_e = 0;
  auto* eu = t3->add_subcommand("euler", "Euler class and the Milnor-Wood inequality");
  eu->add_option("--genus", eu_genus, "base genus (>= 2)")->required();
  eu->add_option("--e", eu_e, "Euler class")->required()->allow_extra_args(false);
  eu->callback([&] {
    action = [&] {
      Json r = euler_json(torus3::euler_report(eu_genus, eu_e), eu_genus, eu_e);
      r["exact"] = true;
      return report::make("torus3 euler", {{"genus", eu_genus}, {"e", eu_e}}, r);
    };
  });
  std::string per_text;
  auto* per = t3->add_subcommand("periods", "rank of a group of periods in rational coordinates");
  per->add_option("--periods", per_text, "vectors separated by ';', entries by ',' (e.g. \"1/2,0;0,1\")")->required();
  per->callback([&] {
    action = [&] {
      std::vector<std::vector<Rational>> v;
      for (const auto& row : split(per_text, ';')) {
        std::vector<Rational> r;
        for (const auto& x : split(row, ',')) r.push_back(parse_rational(x, "--periods"));
        v.push_back(std::move(r));
      }
      const auto pr = torus3::period_group_rank(v);
      Json r = {{"r", pr.r}, {"leaf_cover_rank", pr.leaf_cover_rank}, {"remark", pr.remark}, {"exact", true}};
      return report::make("torus3 periods", {{"periods", per_text}}, r);
    };
  });
  std::string rep_matrix, rep_origami = "torus";
  long rep_eg = 0, rep_e = 0;
  bool rep_has_e = false;
  auto* rep = t3->add_subcommand("report", "manifold report: geometry, b1 and optional Euler data");
  rep->add_option("--matrix", rep_matrix, "monodromy \"a b c d\"")->required();
  rep->add_option("--origami", rep_origami, "fibre: torus (default) or a built-in origami the matrix lifts to");
  rep->add_option("--euler-genus", rep_eg, "base genus of an accompanying circle bundle");
  rep->add_option("--euler", rep_e, "its Euler class")->each([&](const std::string&) { rep_has_e = true; });
  rep->callback([&] {
    action = [&] {
      const auto A = parse_sl2(rep_matrix);
      const auto o = origami::named(rep_origami);
      if (!o) throw UsageError("unknown origami '" + rep_origami + "'");
      Json r;
      Json in = {{"matrix", rep_matrix}, {"origami", rep_origami}};
      torus3::MonodromySummary m;
      if (o->genus() == 1) {
        m = torus3::summarize(A);
      } else {
        const auto w = origami::lift_automorphism(A, *o);
        if (!w) throw DomainError("the matrix does not lift to " + rep_origami);
        const auto act = homology::induced_action(*w, *o);
        m = summary_from_action(o->genus(), A, act.k);
      }
      r["fibre_genus"] = m.genus;
      r["monodromy_class"] = torus3::class_name(m.kind);
      r["geometry"] = geometry_json(torus3::geometry_classify(m));
      r["b1"] = m.b1() ? Json(*m.b1()) : Json(nullptr);
      r["torelli_k"] = m.torelli_k ? Json(*m.torelli_k) : Json(nullptr);
      r["lambda"] = m.lambda ? report::to_json(*m.lambda) : Json(nullptr);
      if (rep_has_e) {
        r["euler"] = euler_json(torus3::euler_report(rep_eg, rep_e), rep_eg, rep_e);
        in["euler_genus"] = rep_eg;
        in["euler"] = rep_e;
      } else {
        r["euler"] = nullptr;
      }
      r["exact"] = true;
      return report::make("torus3 report", in, r);
    };
  });

  // holonomy
  auto* hol = app.add_subcommand("holonomy", "circle dynamics (numerical; tolerances stated in every report)");
  hol->require_subcommand(1);
  hol->footer(
      "Generators: rot:ALPHA (turns), dbl, aff:k=K,b=B, mob:A,B,C,D; lists separated by ';'.\n"
      "Orbit words: state s <- s * 6364136223846793005 + 1442695040888963407 (mod 2^64) starting from the seed;\n"
      "generator index = ((s >> 32) * m) >> 32 for m generators. MINFOL_SEED sets the default seed,\n"
      "MINFOL_THREADS the worker count for --cells.");
  std::string ob_gens, ob_start = "0", ob_eps = "0.01";
  long ob_steps = 10000;
  std::uint64_t ob_seed = 1;
  unsigned ob_cells = 1, ob_threads = 1;
  auto* orbit = hol->add_subcommand("orbit", "orbit-gap statistics");
  orbit->add_option("--gens", ob_gens, "generator list")->required();
  orbit->add_option("--start", ob_start, "starting point in [0, 1)");
  orbit->add_option("--steps", ob_steps, "number of orbit points");
  orbit->add_option("--eps", ob_eps, "density threshold");
  orbit->add_option("--seed", ob_seed, "LCG seed")->envname("MINFOL_SEED");
  orbit->add_option("--cells", ob_cells, "independent runs with seeds seed, seed+1, ...");
  orbit->add_option("--threads", ob_threads, "worker threads for --cells")->envname("MINFOL_THREADS");
  orbit->callback([&] {
    action = [&] {
      const auto gens = parse_gens(ob_gens);
      const double start = parse_double(ob_start, "--start"), eps = parse_double(ob_eps, "--eps");
      Json in = {{"gens", gen_list_json(gens)}, {"start", start}, {"steps", ob_steps}, {"eps", eps}};
      Json r;
      if (ob_cells <= 1) {
        r = orbit_json(holonomy::orbit_density(gens, start, ob_steps, eps, ob_seed));
      } else {
        std::vector<holonomy::OrbitCell> cells;
        for (unsigned i = 0; i < ob_cells; ++i) cells.push_back({start, ob_seed + i});
        const auto stats = holonomy::orbit_density_batch(gens, cells, ob_steps, eps, ob_threads);
        Json rows = Json::array();
        double worst = 0;
        for (std::size_t i = 0; i < stats.size(); ++i) {
          Json row = orbit_json(stats[i]);
          row["seed"] = cells[i].seed;
          rows.push_back(row);
          worst = std::max(worst, stats[i].max_gap);
        }
        r = {{"cells", rows}, {"max_gap_over_cells", worst}};
        in["cells"] = ob_cells;
      }
      r["exact"] = false;
      return report::make("holonomy orbit", in, r, ob_seed);
    };
  });
  std::string st_gens, st_x;
  int st_len = 8;
  auto* stab = hol->add_subcommand("stabilizer", "words of affine maps fixing a point");
  stab->add_option("--gens", st_gens, "affine generators, e.g. \"aff:k=1,b=0;aff:k=0,b=1\"")->required();
  stab->add_option("--x", st_x, "the point")->required();
  stab->add_option("--max-len", st_len, "maximal reduced word length");
  stab->callback([&] {
    action = [&] {
      const auto gens = parse_gens(st_gens);
      const auto aff = affine_only(gens);
      const double x = parse_double(st_x, "--x");
      const auto res = holonomy::stabilizer_search(aff, x, st_len);
      Json ws = Json::array();
      for (const auto& w : res.witnesses) ws.push_back(stab_witness_json(w));
      Json r = {{"structure", structure_name(res.structure)}, {"witnesses", ws},
                {"witness_count", res.witnesses.size()}, {"tolerance", holonomy::kFixedTolerance}, {"exact", false}};
      r["primitive"] = res.primitive ? stab_witness_json(*res.primitive) : Json(nullptr);
      r["counterexample"] = res.counterexample ? stab_witness_json(*res.counterexample) : Json(nullptr);
      r["closed_form_fixed_point"] = res.closed_form_fixed_point ? Json(*res.closed_form_fixed_point) : Json(nullptr);
      return report::make("holonomy stabilizer", {{"gens", gen_list_json(gens)}, {"x", x}, {"max_len", st_len}}, r);
    };
  });
  std::string rn_word;
  long rn_n = 10000;
  auto* rotnum = hol->add_subcommand("rotnum", "rotation number of a circle homeomorphism");
  rotnum->add_option("--word", rn_word, "generators applied left to right")->required();
  rotnum->add_option("--n", rn_n, "iterations (>= 100)");
  rotnum->callback([&] {
    action = [&] {
      const auto word = parse_gens(rn_word);
      const auto rn = holonomy::rotation_number(word, rn_n);
      Json r = {{"rotation_number", rn.value}, {"error_bound", rn.error_bound}, {"units", "turns (R/Z)"},
                {"exact", false}};
      return report::make("holonomy rotnum", {{"word", gen_list_json(word)}, {"n", rn_n}}, r);
    };
  });
  std::vector<std::string> cm_pairs;
  std::string cm_target = "0";
  auto* comm = hol->add_subcommand("commutator", "compare a product of commutators with a rotation");
  comm->add_option("--pair", cm_pairs, "\"mob:a,b,c,d;mob:a,b,c,d\" (repeatable)");
  comm->add_option("--target", cm_target, "rotation angle in turns");
  comm->callback([&] {
    action = [&] {
      std::vector<std::pair<holonomy::Mobius, holonomy::Mobius>> pairs;
      Json in_pairs = Json::array();
      for (const auto& p : cm_pairs) {
        const auto gens = parse_gens(p);
        if (gens.size() != 2) throw UsageError("--pair needs exactly two Mobius generators");
        const auto* f = std::get_if<holonomy::Mobius>(&gens[0]);
        const auto* h = std::get_if<holonomy::Mobius>(&gens[1]);
        if (!f || !h) throw UsageError("--pair needs Mobius generators (mob:a,b,c,d)");
        pairs.emplace_back(*f, *h);
        in_pairs.push_back(gen_list_json(gens));
      }
      const double target = parse_double(cm_target, "--target");
      const auto res = holonomy::verify_commutator_product(pairs, target);
      Json r = {{"max_deviation", res.max_deviation}, {"ok", res.ok}, {"det_ok", res.det_ok},
                {"tolerance", holonomy::kDeviationTolerance}, {"grid", 1024}, {"units", "turns (R/Z)"},
                {"exact", false}};
      return report::make("holonomy commutator", {{"pairs", in_pairs}, {"target", target}}, r);
    };
  });

  // pipeline
  auto* pipe = app.add_subcommand("pipeline", "end-to-end constructions");
  pipe->require_subcommand(1);
  std::string f_matrix, f_origami = "wollmilchsau";
  auto* frw = pipe->add_subcommand("frw", "lifted pseudo-Anosov on an origami: homology, mapping torus, leaf growth");
  frw->add_option("--matrix", f_matrix, "hyperbolic \"a b c d\"")->required();
  frw->add_option("--origami", f_origami, "built-in origami");
  frw->callback([&] { action = [&] { return pipeline_frw(f_matrix, f_origami); }; });
  int pd_n = 0;
  auto* pdbl = pipe->add_subcommand("double", "double covers of the torus and their genus");
  pdbl->add_option("--n", pd_n, "number of branch points (even)")->required();
  pdbl->callback([&] {
    action = [&] {
      const auto spec = cover::build_double_cover(pd_n);
      const long g = cover::genus_of(spec);
      Json r = {{"cover", cover_spec_json(spec)}, {"profile", profile_json(cover::profile_of(spec))},
                {"genus", g}, {"chi", 2 - 2 * g}, {"exact", true}};
      r["surface_bundle"] = euler_json(torus3::euler_report(g, 0), g, 0);
      return report::make("pipeline double", {{"n", pd_n}}, r);
    };
  });

  std::vector<const char*> argv{"minfol"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    if (code != 0) {
      err << "minfol: " << er.str();
      return 1;
    }
    return 0;
  }
  if (!action) {
    err << "minfol: no command\n";
    return 1;
  }
  try {
    const Json rep = action();
    out << (tsv ? report::render_tsv(rep) : report::render_json(rep));
    return 0;
  } catch (const UsageError& e) {
    err << "minfol: usage: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "minfol: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace minfol::cli
