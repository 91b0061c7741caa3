#include "minfol/origami.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "minfol/cover.hpp"
#include "minfol/error.hpp"

namespace minfol::origami {

using sl2z::Token;

namespace {

std::string describe_orbits(const std::vector<std::vector<int>>& orbs) {
  std::ostringstream os;
  for (const auto& o : orbs) {
    os << '{';
    for (std::size_t k = 0; k < o.size(); ++k) os << (k ? " " : "") << o[k] + 1;
    os << '}';
  }
  return os.str();
}

}  // namespace

Origami::Origami(Permutation right, Permutation up) : right_(std::move(right)), up_(std::move(up)) {
  if (right_.size() != up_.size()) throw DomainError("right and up permutations act on different sets");
  if (right_.size() == 0) throw DomainError("an origami needs at least one square");
  const Permutation gens[] = {right_, up_};
  auto orbs = orbits(gens, right_.size());
  if (orbs.size() != 1) throw DomainError("disconnected origami, orbits " + describe_orbits(orbs));
}

Origami Origami::parse(const std::string& right, const std::string& up) {
  auto h = Permutation::parse(right);
  auto v = Permutation::parse(up);
  std::size_t n = std::max(h.size(), v.size());
  return Origami(Permutation::parse(right, n), Permutation::parse(up, n));
}

Permutation Origami::vertex_permutation() const { return up_ * right_ * up_.inverse() * right_.inverse(); }

long Origami::genus() const {
  const long d = static_cast<long>(degree());
  const long V = static_cast<long>(num_vertices());
  return 1 + (d - V) / 2;
}

std::vector<int> Origami::stratum() const { return vertex_permutation().cycle_type(); }

BuildResult build(const Permutation& right, const Permutation& up) {
  Origami o(right, up);
  return {o, o.genus(), o.stratum()};
}

Origami act(Token t, const Origami& o) {
  const Permutation& h = o.right();
  const Permutation& v = o.up();
  switch (t) {
    case Token::T: return Origami(h, v * h.inverse());
    case Token::TInverse: return Origami(h, v * h);
    case Token::S: return Origami(v.inverse(), h);
    case Token::MinusI: return Origami(h.inverse(), v.inverse());
  }
  return o;
}

Origami act(const std::vector<Token>& word, const Origami& o) {
  Origami cur = o;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = act(*it, cur);
  return cur;
}

namespace {

// Relabeling with r(0) = root, or nullopt when the forced map is inconsistent.
std::optional<std::vector<int>> rooted_map(const Origami& from, const Origami& to, int root) {
  const std::size_t n = from.degree();
  std::vector<int> r(n, -1), used(n, 0);
  std::vector<int> queue{0};
  r[0] = root;
  used[static_cast<std::size_t>(root)] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const int j = queue[k];
    const int rj = r[static_cast<std::size_t>(j)];
    const std::pair<int, int> steps[] = {{from.right()(j), to.right()(rj)}, {from.up()(j), to.up()(rj)}};
    for (auto [src, dst] : steps) {
      auto& slot = r[static_cast<std::size_t>(src)];
      if (slot < 0) {
        if (used[static_cast<std::size_t>(dst)]) return std::nullopt;
        slot = dst;
        used[static_cast<std::size_t>(dst)] = 1;
        queue.push_back(src);
      } else if (slot != dst) {
        return std::nullopt;
      }
    }
  }
  return r;
}

std::vector<int> bfs_numbering(const Origami& o, int root) {
  const std::size_t n = o.degree();
  std::vector<int> label(n, -1), queue{root};
  label[static_cast<std::size_t>(root)] = 0;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (int nb : {o.right()(queue[k]), o.up()(queue[k])}) {
      if (label[static_cast<std::size_t>(nb)] < 0) {
        label[static_cast<std::size_t>(nb)] = static_cast<int>(queue.size());
        queue.push_back(nb);
      }
    }
  }
  return label;
}

Origami relabel(const Origami& o, const std::vector<int>& label) {
  const std::size_t n = o.degree();
  std::vector<int> h(n), v(n);
  for (std::size_t i = 0; i < n; ++i) {
    h[static_cast<std::size_t>(label[i])] = label[static_cast<std::size_t>(o.right()(static_cast<int>(i)))];
    v[static_cast<std::size_t>(label[i])] = label[static_cast<std::size_t>(o.up()(static_cast<int>(i)))];
  }
  return Origami(Permutation(h), Permutation(v));
}

}  // namespace

std::optional<Permutation> find_relabeling(const Origami& from, const Origami& to) {
  if (from.degree() != to.degree()) return std::nullopt;
  if (from.stratum() != to.stratum()) return std::nullopt;
  for (int root = 0; root < static_cast<int>(to.degree()); ++root)
    if (auto r = rooted_map(from, to, root)) return Permutation(*r);
  return std::nullopt;
}

Origami canonical_form(const Origami& o) {
  std::optional<Origami> best;
  for (int root = 0; root < static_cast<int>(o.degree()); ++root) {
    Origami cand = relabel(o, bfs_numbering(o, root));
    if (!best || std::make_pair(cand.right(), cand.up()) < std::make_pair(best->right(), best->up())) best = cand;
  }
  return *best;
}

bool isomorphic(const Origami& a, const Origami& b) { return find_relabeling(a, b).has_value(); }

bool verify(const LiftWitness& w, const Origami& o) {
  const Origami image = act(w.word, o);
  const Permutation& r = w.relabeling;
  if (r.size() != o.degree()) return false;
  for (int j = 0; j < static_cast<int>(o.degree()); ++j) {
    if (r(image.right()(j)) != o.right()(r(j))) return false;
    if (r(image.up()(j)) != o.up()(r(j))) return false;
  }
  return true;
}

std::optional<LiftWitness> lift_automorphism(const sl2z::IntMatrix2& A, const Origami& o) {
  if (!sl2z::is_anosov(A)) throw DomainError("lifting requires an Anosov matrix, got " + A.to_string());
  auto word = sl2z::decompose_st(A);
  auto r = find_relabeling(act(word, o), o);
  if (!r) return std::nullopt;
  return LiftWitness{std::move(word), std::move(*r)};
}

Origami torus() { return Origami(Permutation::identity(1), Permutation::identity(1)); }

Origami wollmilchsau() {
  // Bottom edges of 1..4 carry 1..4 straight ticks, top edges of 6, 5, 8, 7
  // carry 1..4 straight ticks; slanted ticks pair the top edges of 1, 2, 3
  // with the bottom edges of 8, 7, 6. Square 5 sits on top of square 4.
  return Origami(Permutation::parse("(1 2 3 4)(5 6 7 8)", 8), Permutation::parse("(1 8 3 6)(2 7 4 5)", 8));
}

std::optional<Origami> named(const std::string& name) {
  if (name == "torus") return torus();
  if (name == "wollmilchsau" || name == "eierlegende-wollmilchsau") return wollmilchsau();
  return std::nullopt;
}

namespace {

struct PillowShifts {
  int u, s, t;  // sheet change across bottom (front->back), back->front on the right, top (front->back)
};

// Corner labels of the pillowcase: z_1 top-left, z_2 bottom-left,
// z_3 bottom-right, z_4 top-right. Counterclockwise loops around z_i shift
// sheets by a_i.
PillowShifts pillow_shifts(int d, const std::vector<int>& a) {
  auto mod = [d](long x) { return static_cast<int>(((x % d) + d) % d); };
  return {mod(a[2]), mod(-static_cast<long>(a[1]) - a[2]), mod(-static_cast<long>(a[3]))};
}

}  // namespace

Origami pillowcase_origami(int d, const std::vector<int>& a) {
  cover::pillowcase_genus(d, a);
  if (d % 2 != 0 || std::any_of(a.begin(), a.end(), [](int x) { return x % 2 == 0; }))
    throw DomainError("the pillowcase cover is a translation surface only for d even and all a_i odd");
  const auto [u, s, t] = pillow_shifts(d, a);
  auto front = [d](long k) { return static_cast<int>(((k % d) + d) % d); };
  auto back = [d, &front](long k) { return d + front(k); };
  std::vector<int> h(static_cast<std::size_t>(2 * d)), v(static_cast<std::size_t>(2 * d));
  for (int k = 0; k < d; ++k) {
    // Squares on odd sheets are drawn rotated by a half turn.
    const bool upright = k % 2 == 0;
    const auto W = static_cast<std::size_t>(front(k));
    const auto B = static_cast<std::size_t>(back(k));
    h[W] = upright ? back(k) : back(k - s);
    v[W] = upright ? back(k + t) : back(k + u);
    h[B] = upright ? front(k + s) : front(k);
    v[B] = upright ? front(k - t) : front(k - u);
  }
  return Origami(Permutation(h), Permutation(v));
}

std::size_t pillowcase_model_vertices(int d, const std::vector<int>& a) {
  cover::pillowcase_genus(d, a);
  const auto [u, s, t] = pillow_shifts(d, a);
  enum { BL = 0, BR = 1, TR = 2, TL = 3 };
  auto W = [d](long k) { return static_cast<int>(((k % d) + d) % d); };
  auto B = [d, &W](long k) { return d + W(k); };
  std::vector<int> parent(static_cast<std::size_t>(8 * d));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  auto glue = [&](int sq1, int c1, int sq2, int c2) {
    parent[static_cast<std::size_t>(find(4 * sq1 + c1))] = find(4 * sq2 + c2);
  };
  for (int k = 0; k < d; ++k) {
    glue(W(k), BR, B(k), BL);  // front right edge = back left edge
    glue(W(k), TR, B(k), TL);
    glue(B(k), BR, W(k + s), BL);  // back right edge = next front left edge
    glue(B(k), TR, W(k + s), TL);
    glue(W(k), BL, B(k + u), BR);  // bottom edges, half turn
    glue(W(k), BR, B(k + u), BL);
    glue(W(k), TL, B(k + t), TR);  // top edges, half turn
    glue(W(k), TR, B(k + t), TL);
  }
  std::size_t classes = 0;
  for (int x = 0; x < 8 * d; ++x)
    if (find(x) == x) ++classes;
  return classes;
}

std::vector<Origami> enumerate_transitive(std::size_t degree) {
  std::vector<int> base(degree);
  std::iota(base.begin(), base.end(), 0);
  std::vector<Permutation> all;
  auto p = base;
  do {
    all.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<Origami> out;
  for (const auto& h : all)
    for (const auto& v : all) {
      const Permutation gens[] = {h, v};
      if (is_transitive(gens, degree)) out.emplace_back(h, v);
    }
  return out;
}

}  // namespace minfol::origami
