#pragma once

#include <array>
#include <span>
#include <vector>

#include "qutritlab/linalg.hpp"
#include "qutritlab/qutrit_state.hpp"
#include "qutritlab/su3.hpp"

namespace qutritlab::multi_qutrit {

using linalg::Complex;
using linalg::ComplexMatrix;
using su3::Vec8;

inline constexpr int kMaxQutrits = 5; // dense 3^N caps at 243

// A validated N-qutrit density operator (Hermitian, unit trace, PSD).
struct NQutritState {
    int n_qutrits;
    ComplexMatrix rho;
};

// Throws "size" for N outside 1..5, "shape"/"not_a_state" on bad matrices.
NQutritState make_state(int n_qutrits, ComplexMatrix rho);

ComplexMatrix maximally_mixed_density(int n_qutrits);
NQutritState maximally_mixed(int n_qutrits);

// Barred components (1/(4 sqrt2), n_1, ..., n_8) entering the coefficient
// form of the expansion function.
struct BarVector {
    std::array<double, 9> nbar;
};

BarVector bar_vector(const Vec8& n);

// w_rho(n_1..n_N) = (2/9pi^2)^N tr(rho prod_i (1 + 4 sqrt3 n_i.lambda)),
// evaluated by building the product operator. Points must be pure
// ("not_pure") and match the qutrit count ("shape").
double expansion_function_w(const NQutritState& s, std::span<const Vec8> points);

// Closed-form floor of w over all states and point tuples:
// -(2/9pi^2)^N 3^{2N-1}, from the {9, -3, -3} spectrum of each factor.
double w_lower_bound(int n_qutrits);

// Every rho_eps = (1-eps) M + eps rho_1 is separable for
// eps <= 1/(1 + 3^{2N-1}).
double separable_lower_threshold(int n_qutrits);

// Eigenvalues of the product operator prod (1 + 4 sqrt3 n_i.lambda):
// all N-fold products of {9, -3, -3}, ascending.
std::vector<double> product_operator_spectrum(int n_qutrits);

// |phi> = (1/sqrt d) sum_a |a>|a> on two d-dimensional particles; d in {3, 9}.
std::vector<Complex> bipartite_maxent(std::size_t d);

// (1-eps) M_{d^2} + eps |phi><phi|.
ComplexMatrix maxent_mixture_density(double epsilon, std::size_t d);

// Projects each particle onto its first three basis states and renormalizes,
// leaving a two-qutrit state; `normalization` is tr(rho Pi).
struct ProjectionResult {
    ComplexMatrix two_qutrit_state; // 9x9
    double normalization;
};

ProjectionResult project_two_particles(const ComplexMatrix& rho, std::size_t d);

// eps' = (eps d/3) / (1 + eps (d/3 - 1)): the mixing weight after projection.
double epsilon_prime(double epsilon, double d);

// States with eps > 1/(1 + 3^{N/2}) exist that are nonseparable; N must be
// even ("parity") and in {2, 4} ("size").
double nonseparable_upper_threshold(int n_qutrits);

// Dense coefficient tensor c_{a1..aN} = (3/2)^N tr(rho l_a1 (x) ... (x) l_aN),
// materialized only for N <= 3 ("size" above that). Row-major over 9^N.
std::vector<double> expansion_coeffs_n(const ComplexMatrix& rho, int n_qutrits);

ComplexMatrix reconstruct_from_coeffs_n(std::span<const double> coeffs, int n_qutrits);

// Coefficient-tensor route to the same w value:
// (16/(9 sqrt3 pi^2))^N sum c_{a1..aN} nbar_1[a1] ... nbar_N[aN].
double w_from_coeffs(std::span<const double> coeffs, int n_qutrits,
                     std::span<const Vec8> points);

} // namespace qutritlab::multi_qutrit
