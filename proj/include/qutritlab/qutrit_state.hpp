#pragma once

#include <array>

#include "qutritlab/linalg.hpp"
#include "qutritlab/su3.hpp"

namespace qutritlab::state {

using linalg::Complex;
using linalg::ComplexMatrix;
using su3::Vec8;

// Unit 8-vector of a pure state, or a general Bloch vector c for mixed ones.
using BlochVector8 = Vec8;

using Ket3 = std::array<Complex, 3>;

// Coordinates of the pure-state chart
//   |psi> = e^{i chi1} sin(theta)cos(phi)|1> + e^{i chi2} sin(theta)sin(phi)|2>
//           + cos(theta)|3>
// with theta, phi in [0, pi/2] and chi1, chi2 in [0, 2pi].
struct PureStateParams {
    double theta;
    double phi;
    double chi1;
    double chi2;
};

// Throws "range" when a coordinate leaves its box.
Ket3 params_to_ket(const PureStateParams& p);

// n_j = (sqrt(3)/2) <psi| l_j |psi>; requires a unit ket ("norm" otherwise).
BlochVector8 ket_to_bloch(const Ket3& ket);

// (1/3)(1 + c.lambda) with no positivity check. Building block for the
// checked conversions and for hot sampling loops over known-pure vectors.
ComplexMatrix bloch_operator(const Vec8& c);

// Same operator, but rejects non-PSD results with "not_a_state" (the message
// carries the offending minimum eigenvalue).
ComplexMatrix bloch_to_density(const Vec8& c);

// P_n = (1/3)(1 + sqrt(3) n.lambda) for a pure unit vector n.
ComplexMatrix pure_projector(const Vec8& n);

ComplexMatrix ket_density(const Ket3& ket);

// Expansion coefficients c_alpha = (3/2) tr(rho l_alpha), alpha = 0..8;
// c_0 = sqrt(3/2) for any unit-trace input.
std::array<double, 9> density_to_bloch(const ComplexMatrix& rho);

// Unit length plus the star-product fixed point star(n,n) == n, both within
// tol. Equivalent to rho(n) being a rank-one projector.
bool is_pure(const Vec8& n, double tol = 1e-10);

// |<psi|psi'>|^2 = (1 + 2 n.m)/3 for pure n, m.
double overlap(const Vec8& n, const Vec8& m);

// Zeroes the coordinates the chart does not determine (phi, chi1, chi2 at
// theta=0; chi2 at phi=0; chi1 at phi=pi/2). Only for test determinism;
// conversions never canonicalize on input.
PureStateParams canonical_params(const PureStateParams& p);

} // namespace qutritlab::state
