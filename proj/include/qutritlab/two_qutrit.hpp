#pragma once

#include <array>
#include <span>
#include <vector>

#include "qutritlab/linalg.hpp"
#include "qutritlab/report.hpp"
#include "qutritlab/su3.hpp"

namespace qutritlab::two_qutrit {

using linalg::Complex;
using linalg::ComplexMatrix;

// Mixture weight of the maximally entangled state in
// rho_eps = (1 - eps) M_9 + eps |Psi><Psi|.
struct IsotropicState {
    double epsilon;
};

// Two-qutrit expansion coefficients c_ab = (9/4) tr(rho l_a (x) l_b),
// a, b = 0..8; c_00 = 3/2 for unit trace.
struct ExpansionCoeffs2 {
    std::array<std::array<double, 9>, 9> c{};
};

// One of the twelve product states (|a> + z|b>)/sqrt2 (x) (|a> + z*|b>)/sqrt2
// with 1 <= a < b <= 3 and z in {+1, -1, +i, -i}.
struct EnsembleMember {
    int a;
    int b;
    Complex z;
    double weight;
};

inline constexpr double kSeparabilityThreshold = 0.25;
inline constexpr double kBoundaryTol = 1e-12;

// |Psi><Psi| with |Psi> = (|11> + |22> + |33>)/sqrt3.
ComplexMatrix max_entangled();

ComplexMatrix isotropic_density(const IsotropicState& s);
ComplexMatrix isotropic_density(double epsilon);

ExpansionCoeffs2 expansion_coeffs(const ComplexMatrix& rho);

// rho = (1/9) sum c_ab l_a (x) l_b; exact inverse of expansion_coeffs.
ComplexMatrix reconstruct_from_coeffs(const ExpansionCoeffs2& coeffs);

// (1/3) sum_j |c_jj|. At most 1 for any separable state; evaluates to
// 4 eps on the isotropic family.
double necessity_bound(const ExpansionCoeffs2& coeffs);

// Throws "member" unless 1 <= a < b <= 3 and z in {+1, -1, +i, -i}.
std::array<Complex, 9> ensemble_member_ket(int a, int b, Complex z);

// The twelve members at weight 1/12 each.
std::vector<EnsembleMember> canonical_ensemble();

// Equal-weight mixture of the twelve members,
// = (3/4) M_9 + (1/4) |Psi><Psi| exactly.
ComplexMatrix ensemble_mixture();

// Minimum eigenvalue of rho^{T_B}; negative values witness entanglement.
double ppt_min_eig(const ComplexMatrix& rho);

// (1 + d1 d2 a1 a2)^{-1} where a_i^2 is the largest eigenvalue of the i-th
// marginal of |psi><psi|. Throws "norm" for a non-unit ket.
double vidal_tarrach_threshold(std::span<const Complex> psi, std::size_t d1, std::size_t d2);

// Full verdict for the isotropic family: thresholds, PPT and necessity
// witnesses, and (on the separable side) the explicit ensemble
// decomposition rho_eps = (1 - 4 eps) M_9 + sum_members (eps/3) |Phi><Phi|.
SeparabilityReport separability_verdict(const IsotropicState& s);

} // namespace qutritlab::two_qutrit
