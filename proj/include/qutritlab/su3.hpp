#pragma once

#include <array>

#include "qutritlab/linalg.hpp"

namespace qutritlab::su3 {

using linalg::Complex;
using linalg::ComplexMatrix;

// Coordinates in the eight-dimensional Bloch space.
using Vec8 = std::array<double, 8>;

// lambda[1..8] are the Gell-Mann generators; lambda[0] = sqrt(2/3)*I
// completes them to an orthogonal operator basis with tr(l_a l_b) = 2 d_ab.
struct GellMannBasis {
    std::array<ComplexMatrix, 9> lambda;
};

GellMannBasis build_basis();

// f antisymmetric, d symmetric, both from the generator traces:
//   f_jkl = tr([l_j, l_k] l_l) / 4i,   d_jkl = tr({l_j, l_k} l_l) / 4.
struct StructureConstants {
    std::array<std::array<std::array<double, 8>, 8>, 8> f{};
    std::array<std::array<std::array<double, 8>, 8>, 8> d{};
};

StructureConstants compute_structure_constants(const GellMannBasis& basis);

// Cached immutable instances; safe for shared read access.
const GellMannBasis& basis();
const StructureConstants& structure_constants();

double dot(const Vec8& a, const Vec8& b);

// Symmetric bilinear product (a*b)_j = sqrt(3) d_jkl a_k b_l, normalized so
// that pure-state unit vectors satisfy star(n, n) == n.
Vec8 star(const StructureConstants& sc, const Vec8& a, const Vec8& b);
Vec8 star(const Vec8& a, const Vec8& b);

// c_j l_j as a 3x3 matrix.
ComplexMatrix bloch_dot_lambda(const Vec8& c);

} // namespace qutritlab::su3
