#pragma once

// Square-tiled surfaces.
//
// Conventions (0-based internally, 1-based in text and JSON):
//   right(i)  is the square glued to the right edge of square i;
//   up(i)     is the square glued to the top edge of square i.
// Permutation products are function compositions, so "v * h^-1" applies
// h^-1 first. The SL(2,Z) generators act by
//   T    : (h, v) -> (h, v h^-1)      shear (1 1; 0 1)
//   T^-1 : (h, v) -> (h, v h)
//   S    : (h, v) -> (v^-1, h)        rotation by a quarter turn
//   -I   : (h, v) -> (h^-1, v^-1)     rotation by a half turn
// where in every case square i of the image is the re-cut image of square i
// that keeps the (rotated) bottom-left corner of the original square.

#include <optional>
#include <string>
#include <vector>

#include "minfol/permutation.hpp"
#include "minfol/sl2z.hpp"

namespace minfol::origami {

class Origami {
 public:
  // Throws DomainError("disconnected ...") listing the orbits when the pair
  // does not act transitively.
  Origami(Permutation right, Permutation up);
  static Origami parse(const std::string& right, const std::string& up);

  std::size_t degree() const { return right_.size(); }
  const Permutation& right() const { return right_; }
  const Permutation& up() const { return up_; }

  // Going counterclockwise around a vertex visits bottom-left corners
  // i, c(i), c(c(i)), ... with c = up * right * up^-1 * right^-1.
  Permutation vertex_permutation() const;
  std::size_t num_vertices() const { return vertex_permutation().num_cycles(); }
  long genus() const;
  // Cone angles as multiples of 2 pi, sorted descending.
  std::vector<int> stratum() const;

  friend bool operator==(const Origami&, const Origami&) = default;

 private:
  Permutation right_, up_;
};

struct BuildResult {
  Origami origami;
  long genus;
  std::vector<int> stratum;
};

BuildResult build(const Permutation& right, const Permutation& up);

Origami act(sl2z::Token t, const Origami& o);
// Applies A = t_1 ... t_k, i.e. t_k first.
Origami act(const std::vector<sl2z::Token>& word, const Origami& o);

// A relabeling r with r(from.right(j)) = to.right(r(j)) and likewise for up,
// i.e. a translation isomorphism from -> to. Determined by r(0); every root
// is tried.
std::optional<Permutation> find_relabeling(const Origami& from, const Origami& to);
// Lexicographically least relabeling obtained by breadth-first renumbering
// from some root; equal for isomorphic origamis.
Origami canonical_form(const Origami& o);
bool isomorphic(const Origami& a, const Origami& b);

struct LiftWitness {
  std::vector<sl2z::Token> word;
  Permutation relabeling;  // from squares of word . o to squares of o
};

bool verify(const LiftWitness& w, const Origami& o);

// Requires A Anosov. Returns the affine lift of A as word + relabeling, or
// nullopt when A . o is not isomorphic to o.
std::optional<LiftWitness> lift_automorphism(const sl2z::IntMatrix2& A, const Origami& o);

Origami torus();
// Eight squares read from the edge markings of the standard picture: two
// rows 1-2-3-4 and 5-6-7-8, square 5 above square 4.
Origami wollmilchsau();
std::optional<Origami> named(const std::string& name);

// Translation-surface model of the cyclic cover w^d = prod (z - z_i)^{a_i}
// of the pillowcase: 2d squares (front and back square on each of the d
// sheets). Requires d even, all a_i odd, and the admissibility conditions.
Origami pillowcase_origami(int d, const std::vector<int>& a);

// Number of vertices of the 2d-square half-translation model of the same
// cover, valid for every admissible (d, a); the genus is 1 + (2d - V) / 2.
std::size_t pillowcase_model_vertices(int d, const std::vector<int>& a);

// All transitive origamis of the given degree, one per (right, up) pair
// (not up to isomorphism). Intended for small degrees.
std::vector<Origami> enumerate_transitive(std::size_t degree);

}  // namespace minfol::origami
