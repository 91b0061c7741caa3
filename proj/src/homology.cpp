#include "minfol/homology.hpp"

#include <algorithm>
#include <deque>

#include "minfol/error.hpp"

namespace minfol::homology {

using origami::Origami;
using sl2z::Token;

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

struct HalfEdge {
  std::size_t edge;
  bool outgoing;
};

// Half-edges around every vertex in counterclockwise order.
std::vector<std::vector<HalfEdge>> vertex_stars(const Origami& o) {
  const int d = static_cast<int>(o.degree());
  const Permutation right_inv = o.right().inverse();
  const Permutation up_inv = o.up().inverse();
  std::vector<std::vector<HalfEdge>> stars;
  for (const auto& cycle : o.vertex_permutation().cycles()) {
    std::vector<HalfEdge> star;
    for (int i : cycle) {
      const int left = right_inv(i);
      const int below_left = up_inv(left);
      star.push_back({idx(i), true});                          // bottom edge of i, east
      star.push_back({idx(d + i), true});                      // left edge of i, north
      star.push_back({idx(left), false});                      // bottom edge of the left square, west
      star.push_back({idx(d + o.right()(below_left)), false});  // right edge of the south-west square
    }
    stars.push_back(std::move(star));
  }
  return stars;
}

// Spanning tree, fundamental cycles and the Smith form of the boundary
// relations expressed in fundamental-cycle coordinates.
class ChainComplex {
 public:
  explicit ChainComplex(const Origami& o) : o_(o), d_(o.degree()) {
    const auto vert = corner_vertices(o);
    const std::size_t V = o.num_vertices();
    const std::size_t E = 2 * d_;
    tail_.resize(E);
    head_.resize(E);
    for (std::size_t i = 0; i < d_; ++i) {
      tail_[i] = vert[i];
      head_[i] = vert[idx(o.right()(static_cast<int>(i)))];
      tail_[d_ + i] = vert[i];
      head_[d_ + i] = vert[idx(o.up()(static_cast<int>(i)))];
    }

    // Breadth-first spanning tree rooted at vertex 0; parent_edge[v] leads towards the root.
    std::vector<int> parent_edge(V, -1);
    std::vector<bool> reached(V, false), in_tree(E, false);
    std::deque<int> queue{0};
    reached[0] = true;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (std::size_t e = 0; e < E; ++e) {
        int other = -1;
        if (tail_[e] == x) other = head_[e];
        else if (head_[e] == x) other = tail_[e];
        if (other < 0 || reached[idx(other)]) continue;
        reached[idx(other)] = true;
        parent_edge[idx(other)] = static_cast<int>(e);
        in_tree[e] = true;
        queue.push_back(other);
      }
    }

    // Chain from vertex x to the root along the tree.
    auto to_root = [&](int x) {
      Chain c(E, 0);
      while (parent_edge[idx(x)] >= 0) {
        const auto e = idx(parent_edge[idx(x)]);
        if (tail_[e] == x) {
          c[e] += 1;
          x = head_[e];
        } else {
          c[e] -= 1;
          x = tail_[e];
        }
      }
      return c;
    };

    for (std::size_t e = 0; e < E; ++e) {
      if (in_tree[e]) continue;
      Chain z(E, 0);
      z[e] = 1;
      const Chain from_head = to_root(head_[e]);
      const Chain from_tail = to_root(tail_[e]);
      for (std::size_t j = 0; j < E; ++j) z[j] += from_head[j] - from_tail[j];
      non_tree_.push_back(e);
      fundamental_.push_back(std::move(z));
    }

    const IntMatrix dsq = boundary_squares(o);
    IntMatrix relations(d_, non_tree_.size());
    for (std::size_t s = 0; s < d_; ++s)
      for (std::size_t j = 0; j < non_tree_.size(); ++j) relations(s, j) = dsq(non_tree_[j], s);
    snf_ = smith_normal_form(relations);
    for (std::size_t i = 0; i < snf_.rank; ++i)
      if (snf_.D(i, i) != 1) throw DomainError("internal: torsion in the homology of a closed orientable surface");
  }

  std::size_t rank() const { return non_tree_.size() - snf_.rank; }

  std::vector<Chain> basis() const {
    std::vector<Chain> out;
    for (std::size_t i = snf_.rank; i < non_tree_.size(); ++i) {
      Chain c(2 * d_, 0);
      for (std::size_t j = 0; j < non_tree_.size(); ++j) {
        const Int coef = snf_.V_inverse(i, j);
        if (coef == 0) continue;
        for (std::size_t e = 0; e < c.size(); ++e) c[e] = checked_add(c[e], checked_mul(coef, fundamental_[j][e]));
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  std::vector<Int> coordinates(const Chain& cycle) const {
    if (cycle.size() != 2 * d_) throw DomainError("chain has the wrong length");
    std::vector<Int> vertex_sum(o_.num_vertices(), 0);
    for (std::size_t e = 0; e < cycle.size(); ++e) {
      vertex_sum[idx(head_[e])] += cycle[e];
      vertex_sum[idx(tail_[e])] -= cycle[e];
    }
    if (std::any_of(vertex_sum.begin(), vertex_sum.end(), [](Int x) { return x != 0; }))
      throw DomainError("chain is not a cycle");
    const std::size_t m = non_tree_.size();
    std::vector<Int> out;
    for (std::size_t i = snf_.rank; i < m; ++i) {
      Int y = 0;
      for (std::size_t j = 0; j < m; ++j) y = checked_add(y, checked_mul(cycle[non_tree_[j]], snf_.V(j, i)));
      out.push_back(y);
    }
    return out;
  }

 private:
  const Origami& o_;
  std::size_t d_;
  std::vector<int> tail_, head_;
  std::vector<std::size_t> non_tree_;
  std::vector<Chain> fundamental_;
  SmithForm snf_;
};

}  // namespace

std::vector<int> corner_vertices(const Origami& o) {
  std::vector<int> vert(o.degree(), -1);
  const auto cycles = o.vertex_permutation().cycles();
  for (std::size_t v = 0; v < cycles.size(); ++v)
    for (int i : cycles[v]) vert[idx(i)] = static_cast<int>(v);
  return vert;
}

IntMatrix boundary_edges(const Origami& o) {
  const auto vert = corner_vertices(o);
  const std::size_t d = o.degree();
  IntMatrix B(o.num_vertices(), 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    const int ii = static_cast<int>(i);
    B(idx(vert[idx(o.right()(ii))]), i) += 1;
    B(idx(vert[i]), i) -= 1;
    B(idx(vert[idx(o.up()(ii))]), d + i) += 1;
    B(idx(vert[i]), d + i) -= 1;
  }
  return B;
}

IntMatrix boundary_squares(const Origami& o) {
  const std::size_t d = o.degree();
  IntMatrix B(2 * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const int ii = static_cast<int>(i);
    B(i, i) += 1;                            // bottom
    B(d + idx(o.right()(ii)), i) += 1;       // right
    B(idx(o.up()(ii)), i) -= 1;              // top, traversed leftwards
    B(d + i, i) -= 1;                        // left, traversed downwards
  }
  return B;
}

Int intersection(const Origami& o, const Chain& a, const Chain& b) {
  // Push b slightly to its right. Near a vertex the pushed copy of a passage
  // "in along p, out along q" sweeps counterclockwise from p to q and crosses
  // exactly the half-edges strictly between them, each with sign +1 when a
  // leaves the vertex along it.
  if (a.size() != 2 * o.degree() || b.size() != 2 * o.degree()) throw DomainError("chain has the wrong length");
  Int total = 0;
  for (const auto& star : vertex_stars(o)) {
    const std::size_t n = star.size();
    std::vector<Int> prefix(n + 1, 0);
    for (std::size_t j = 0; j < n; ++j) {
      const Int flow = star[j].outgoing ? a[star[j].edge] : -a[star[j].edge];
      prefix[j + 1] = checked_add(prefix[j], flow);
    }
    if (prefix[n] != 0) throw DomainError("intersection of a chain that is not a cycle");
    for (std::size_t j = 0; j < n; ++j) {
      const Int flow = star[j].outgoing ? b[star[j].edge] : -b[star[j].edge];
      if (flow > 0) total = checked_add(total, checked_mul(flow, prefix[j]));
      else if (flow < 0) total = checked_add(total, checked_mul(flow, prefix[j + 1]));
    }
  }
  return total;
}

HomologyBasis homology_basis(const Origami& o) {
  ChainComplex cx(o);
  HomologyBasis hb;
  hb.rank = cx.rank();
  hb.cycles = cx.basis();
  hb.intersection = IntMatrix(hb.rank, hb.rank);
  for (std::size_t i = 0; i < hb.rank; ++i)
    for (std::size_t j = 0; j < hb.rank; ++j) hb.intersection(i, j) = intersection(o, hb.cycles[i], hb.cycles[j]);
  if (static_cast<long>(hb.rank) != 2 * o.genus()) throw DomainError("internal: homology rank differs from 2g");
  return hb;
}

std::vector<Int> coordinates(const Origami& o, const Chain& cycle) { return ChainComplex(o).coordinates(cycle); }

std::pair<Int, Int> displacement(const Origami& o, const Chain& c) {
  const std::size_t d = o.degree();
  Int x = 0, y = 0;
  for (std::size_t i = 0; i < d; ++i) {
    x = checked_add(x, c[i]);
    y = checked_add(y, c[d + i]);
  }
  return {x, y};
}

Chain push_chain(Token t, const Origami& o, const Chain& c) {
  const std::size_t d = o.degree();
  if (c.size() != 2 * d) throw DomainError("chain has the wrong length");
  Chain out(2 * d, 0);
  auto add = [&](std::size_t e, Int coef) { out[e] = checked_add(out[e], coef); };
  const Permutation right_inv = o.right().inverse();
  const Permutation up_inv = o.up().inverse();
  for (std::size_t i = 0; i < d; ++i) {
    const int ii = static_cast<int>(i);
    const Int h = c[i], v = c[d + i];
    switch (t) {
      case Token::T:  // the left edge becomes the diagonal: bottom then right edge
        add(i, h);
        add(i, v);
        add(d + idx(o.right()(ii)), v);
        break;
      case Token::TInverse:  // left edge becomes the anti-diagonal of the left neighbour
        add(i, h);
        add(d + i, v);
        add(idx(o.up()(ii)), checked_neg(v));
        break;
      case Token::S:  // bottom -> right edge, left -> reversed bottom edge
        add(d + idx(up_inv(ii)), h);
        add(i, checked_neg(v));
        break;
      case Token::MinusI:  // bottom -> reversed top edge, left -> reversed right edge
        add(idx(up_inv(ii)), checked_neg(h));
        add(d + idx(right_inv(ii)), checked_neg(v));
        break;
    }
  }
  return out;
}

Chain push_chain(const origami::LiftWitness& w, const Origami& o, const Chain& c) {
  Origami cur = o;
  Chain chain = c;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    chain = push_chain(*it, cur, chain);
    cur = origami::act(*it, cur);
  }
  const std::size_t d = o.degree();
  Chain out(2 * d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    const auto rj = idx(w.relabeling(static_cast<int>(j)));
    out[rj] = chain[j];
    out[d + rj] = chain[d + j];
  }
  return out;
}

TorelliOrder torelli_order(const IntMatrix& M, const IntMatrix& J) {
  if (!M.square() || !J.square() || M.rows() != J.rows())
    throw DomainError("torelli_order: M and J must be square of the same size");
  for (std::size_t i = 0; i < J.rows(); ++i)
    for (std::size_t j = 0; j < J.cols(); ++j)
      if (J(i, j) != -J(j, i)) throw DomainError("torelli_order: intersection form is not antisymmetric");
  if (determinant(J) != 1) throw DomainError("torelli_order: intersection form is not unimodular");
  const std::size_t n = M.rows();
  TorelliOrder out;
  out.k = n - rank(M - IntMatrix::identity(n));
  out.b1 = out.k + 1;
  out.symplectic = M.transpose() * J * M == J;
  return out;
}

HomologyAction induced_action(const origami::LiftWitness& w, const Origami& o) {
  if (!origami::verify(w, o)) throw DomainError("lift witness does not match the origami");
  ChainComplex cx(o);
  HomologyAction act;
  act.basis = homology_basis(o);
  const std::size_t n = act.basis.rank;
  act.M = IntMatrix(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto col = cx.coordinates(push_chain(w, o, act.basis.cycles[a]));
    for (std::size_t b = 0; b < n; ++b) act.M(b, a) = col[b];
  }
  const TorelliOrder t = torelli_order(act.M, act.basis.intersection);
  act.k = t.k;
  act.b1 = t.b1;
  act.symplectic = t.symplectic;
  act.fixed_basis = kernel_basis(act.M - IntMatrix::identity(n));
  act.fixed_in_projection_kernel = true;
  for (const auto& y : act.fixed_basis) {
    Chain z(2 * o.degree(), 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t e = 0; e < z.size(); ++e)
        z[e] = checked_add(z[e], checked_mul(y[a], act.basis.cycles[a][e]));
    const auto [dx, dy] = displacement(o, z);
    if (dx != 0 || dy != 0) act.fixed_in_projection_kernel = false;
  }
  return act;
}

}  // namespace minfol::homology
