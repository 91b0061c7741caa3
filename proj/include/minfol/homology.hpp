#pragma once

// First homology of a square-tiled surface from its cellular chain complex,
// the algebraic intersection form, the action of an affine lift on homology,
// and the fixed-subspace dimension ("Torelli order") of that action.
//
// Edge numbering: edge i (0 <= i < d) is the bottom edge of square i,
// oriented rightwards; edge d + i is the left edge of square i, oriented
// upwards. Chains are integer vectors of length 2d in this numbering.

#include <optional>
#include <vector>

#include "minfol/int_linalg.hpp"
#include "minfol/origami.hpp"

namespace minfol::homology {

using Chain = std::vector<Int>;

struct HomologyBasis {
  std::size_t rank = 0;            // 2g
  std::vector<Chain> cycles;       // basis cycles as edge chains
  IntMatrix intersection;          // J(a, b) = cycles[a] . cycles[b]
};

// Cellular boundary maps of the square complex.
IntMatrix boundary_edges(const origami::Origami& o);    // V x 2d
IntMatrix boundary_squares(const origami::Origami& o);  // 2d x d
// Vertex index of the bottom-left corner of every square.
std::vector<int> corner_vertices(const origami::Origami& o);

HomologyBasis homology_basis(const origami::Origami& o);

// Coordinates of a cycle in the basis of homology_basis(o).
std::vector<Int> coordinates(const origami::Origami& o, const Chain& cycle);

// Algebraic intersection number of two edge cycles.
Int intersection(const origami::Origami& o, const Chain& a, const Chain& b);

// Total horizontal and vertical displacement of a chain: the map induced on
// first homology by the covering of the square torus.
std::pair<Int, Int> displacement(const origami::Origami& o, const Chain& c);

// Edge-level map induced by one generator from o to act(t, o).
Chain push_chain(sl2z::Token t, const origami::Origami& o, const Chain& c);
// Edge-level map of the affine automorphism given by a lift witness.
Chain push_chain(const origami::LiftWitness& w, const origami::Origami& o, const Chain& c);

struct TorelliOrder {
  std::size_t k = 0;
  std::size_t b1 = 1;
  bool symplectic = false;
};

// k = dim_Q ker(M - I), b1 = k + 1, symplectic = (M^T J M == J).
// J must be antisymmetric and unimodular of the same size as M.
TorelliOrder torelli_order(const IntMatrix& M, const IntMatrix& J);

struct HomologyAction {
  IntMatrix M;  // column a holds the image of basis cycle a
  std::size_t k = 0;
  std::size_t b1 = 1;
  bool symplectic = false;
  std::vector<std::vector<Int>> fixed_basis;  // integer basis of ker(M - I)
  bool fixed_in_projection_kernel = false;
  HomologyBasis basis;
};

HomologyAction induced_action(const origami::LiftWitness& w, const origami::Origami& o);

}  // namespace minfol::homology
