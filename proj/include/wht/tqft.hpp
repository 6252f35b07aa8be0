#pragma once

#include <vector>

#include "wht/diagram.hpp"
#include "wht/engine.hpp"
#include "wht/tl.hpp"

namespace wht {

// A 2-sphere with colored banded points, ordered along the equator.
struct MarkedSphere {
  std::vector<int> colors;
};

// Dimension of V(sphere): admissible colorings of a fixed left-comb tree
// with the given leaf colors.
long dim_v(const MarkedSphere& s);

// All crossingless matchings of 2n points (n_bottom = 0), deterministic order.
std::vector<Matching> catalan_basis(int n);

// The disk diagram of a crossingless matching, all strands colored 1:
// a tangle from the empty boundary to 2n points.
Diagram matching_diagram(const Matching& m);

// Internal-color paths of admissible left-comb tree colorings.
std::vector<std::vector<int>> tree_colorings(const MarkedSphere& s);
// The corresponding basis diagrams (tangles from empty boundary to s).
std::vector<Diagram> tree_basis(const MarkedSphere& s);

// <x, y>: bracket of the conjugate of x glued to y along their common
// boundary. Conjugation is mirror + vertical flip; sesquilinear in the
// first argument.
RatFn pair_hermitian(const Diagram& x, const Diagram& y);

struct GramMatrix {
  std::vector<Diagram> basis;
  std::vector<std::vector<RatFn>> entries;
};

GramMatrix gram_matrix(const std::vector<Diagram>& basis);
// Gram matrix of the Catalan basis on 2n points colored 1.
GramMatrix gram_matrix_catalan(int n);

RatFn determinant(std::vector<std::vector<RatFn>> m);
// det(Gram) as a polynomial in d has degree exactly n*c(n).
bool gram_det_degree_check(int n);

struct MorphismMatrix {
  MarkedSphere source, target;
  std::vector<std::vector<RatFn>> entries;
};

// Matrix of the tangle m : source -> target in orthogonal bases b1, b2.
MorphismMatrix morphism_matrix(const Diagram& m, const std::vector<Diagram>& b1,
                               const std::vector<Diagram>& b2);
RatFn trace_morphism(const MorphismMatrix& m);

// Closure of an endo-tangle through one disk gate spanning the side arcs;
// for the identity on m strands this is the z^m diagram.
Diagram gated_closure(const Diagram& tangle);

// Hoste-Przytycki projection: bracket of a link colored one in a single
// S^1 x S^2, which must be an honest Laurent polynomial.
Laurent hp_projection(const Diagram& d);

long catalan_number(int n);

}  // namespace wht
