#include "qutritlab/multi_qutrit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qutritlab::multi_qutrit {

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t pow3(int n) {
    std::size_t d = 1;
    for (int i = 0; i < n; ++i) d *= 3;
    return d;
}

std::size_t pow9(int n) {
    std::size_t d = 1;
    for (int i = 0; i < n; ++i) d *= 9;
    return d;
}

void check_qutrit_count(int n) {
    if (n < 1 || n > kMaxQutrits)
        fail("size", "qutrit count must lie in 1.." + std::to_string(kMaxQutrits));
}

// 1 + 4 sqrt3 n.lambda, the per-site factor of the product operator.
ComplexMatrix site_factor(const Vec8& n) {
    Vec8 c;
    for (int j = 0; j < 8; ++j) c[j] = 4.0 * std::sqrt(3.0) * n[j];
    ComplexMatrix m = su3::bloch_dot_lambda(c);
    for (std::size_t i = 0; i < 3; ++i) m(i, i) += 1.0;
    return m;
}

} // namespace

NQutritState make_state(int n_qutrits, ComplexMatrix rho) {
    check_qutrit_count(n_qutrits);
    if (rho.dim() != pow3(n_qutrits)) fail("shape", "density dimension must be 3^N");
    if (!is_hermitian(rho)) fail("not_a_state", "density must be Hermitian");
    if (std::abs(trace(rho) - Complex{1.0, 0.0}) > 1e-12)
        fail("not_a_state", "density must have unit trace");
    if (!is_psd(rho)) fail("not_a_state", "density must be positive semidefinite");
    return {n_qutrits, std::move(rho)};
}

ComplexMatrix maximally_mixed_density(int n_qutrits) {
    check_qutrit_count(n_qutrits);
    const std::size_t d = pow3(n_qutrits);
    ComplexMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0 / static_cast<double>(d);
    return m;
}

NQutritState maximally_mixed(int n_qutrits) {
    return {n_qutrits, maximally_mixed_density(n_qutrits)};
}

BarVector bar_vector(const Vec8& n) {
    BarVector out;
    out.nbar[0] = 1.0 / (4.0 * std::sqrt(2.0));
    for (int j = 0; j < 8; ++j) out.nbar[j + 1] = n[j];
    return out;
}

double expansion_function_w(const NQutritState& s, std::span<const Vec8> points) {
    if (points.size() != static_cast<std::size_t>(s.n_qutrits))
        fail("shape", "need one pure point per qutrit");
    for (const Vec8& n : points)
        if (!state::is_pure(n)) fail("not_pure", "expansion points must be pure");

    ComplexMatrix op = site_factor(points[0]);
    for (std::size_t i = 1; i < points.size(); ++i) op = tensor(op, site_factor(points[i]));

    const double scale = std::pow(2.0 / (9.0 * kPi * kPi), s.n_qutrits);
    return scale * std::real(trace(s.rho * op));
}

double w_lower_bound(int n_qutrits) {
    if (n_qutrits < 1) fail("size", "qutrit count must be >= 1");
    return -std::pow(2.0 / (9.0 * kPi * kPi), n_qutrits) *
           std::pow(3.0, 2 * n_qutrits - 1);
}

double separable_lower_threshold(int n_qutrits) {
    if (n_qutrits < 1) fail("size", "qutrit count must be >= 1");
    return 1.0 / (1.0 + std::pow(3.0, 2 * n_qutrits - 1));
}

std::vector<double> product_operator_spectrum(int n_qutrits) {
    check_qutrit_count(n_qutrits);
    // Each factor has eigenvalues {9, -3, -3}.
    std::vector<double> spec{1.0};
    for (int i = 0; i < n_qutrits; ++i) {
        std::vector<double> next;
        next.reserve(spec.size() * 3);
        for (double v : spec) {
            next.push_back(9.0 * v);
            next.push_back(-3.0 * v);
            next.push_back(-3.0 * v);
        }
        spec = std::move(next);
    }
    std::sort(spec.begin(), spec.end());
    return spec;
}

std::vector<Complex> bipartite_maxent(std::size_t d) {
    if (d != 3 && d != 9) fail("size", "particle dimension must be 3 or 9");
    std::vector<Complex> ket(d * d);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t a = 0; a < d; ++a) ket[a * d + a] = amp;
    return ket;
}

ComplexMatrix maxent_mixture_density(double epsilon, std::size_t d) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) fail("range", "epsilon must lie in [0, 1]");
    const auto ket = bipartite_maxent(d);
    const std::size_t dd = d * d;
    ComplexMatrix rho(dd);
    for (std::size_t i = 0; i < dd; ++i)
        for (std::size_t j = 0; j < dd; ++j) rho(i, j) = epsilon * ket[i] * std::conj(ket[j]);
    const double mixed = (1.0 - epsilon) / static_cast<double>(dd);
    for (std::size_t i = 0; i < dd; ++i) rho(i, i) += mixed;
    return rho;
}

ProjectionResult project_two_particles(const ComplexMatrix& rho, std::size_t d) {
    if (d != 3 && d != 9) fail("shape", "particle dimension must be 3 or 9");
    if (rho.dim() != d * d) fail("shape", "state dimension must be d^2");

    // Pi keeps local indices {0,1,2} of each particle; the surviving block
    // is the two-qutrit state up to normalization.
    ComplexMatrix out(9);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            for (std::size_t ap = 0; ap < 3; ++ap)
                for (std::size_t bp = 0; bp < 3; ++bp)
                    out(a * 3 + b, ap * 3 + bp) = rho(a * d + b, ap * d + bp);

    const double norm = std::real(trace(out));
    if (norm <= 0.0) fail("shape", "projection annihilated the state");
    out *= Complex{1.0 / norm, 0.0};
    return {std::move(out), norm};
}

double epsilon_prime(double epsilon, double d) {
    return (epsilon * d / 3.0) / (1.0 + epsilon * (d / 3.0 - 1.0));
}

double nonseparable_upper_threshold(int n_qutrits) {
    if (n_qutrits % 2 != 0)
        fail("parity", "the projection construction needs an even qutrit count");
    if (n_qutrits != 2 && n_qutrits != 4)
        fail("size", "construction implemented for N in {2, 4}");
    return 1.0 / (1.0 + std::pow(3.0, n_qutrits / 2));
}

std::vector<double> expansion_coeffs_n(const ComplexMatrix& rho, int n_qutrits) {
    if (n_qutrits < 1 || n_qutrits > 3)
        fail("size", "coefficient tensor materialized only for N <= 3");
    if (rho.dim() != pow3(n_qutrits)) fail("shape", "density dimension must be 3^N");

    const auto& basis = su3::basis();
    const std::size_t count = pow9(n_qutrits);
    std::vector<double> coeffs(count);
    const double scale = std::pow(1.5, n_qutrits);
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::size_t rest = idx;
        std::array<int, 3> alpha{};
        for (int i = n_qutrits - 1; i >= 0; --i) {
            alpha[i] = static_cast<int>(rest % 9);
            rest /= 9;
        }
        ComplexMatrix op = basis.lambda[alpha[0]];
        for (int i = 1; i < n_qutrits; ++i) op = tensor(op, basis.lambda[alpha[i]]);
        coeffs[idx] = scale * std::real(trace(rho * op));
    }
    return coeffs;
}

ComplexMatrix reconstruct_from_coeffs_n(std::span<const double> coeffs, int n_qutrits) {
    if (n_qutrits < 1 || n_qutrits > 3)
        fail("size", "coefficient tensor materialized only for N <= 3");
    if (coeffs.size() != pow9(n_qutrits)) fail("shape", "coefficient count must be 9^N");

    const auto& basis = su3::basis();
    ComplexMatrix rho(pow3(n_qutrits));
    const double scale = 1.0 / std::pow(3.0, n_qutrits);
    for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
        if (coeffs[idx] == 0.0) continue;
        std::size_t rest = idx;
        std::array<int, 3> alpha{};
        for (int i = n_qutrits - 1; i >= 0; --i) {
            alpha[i] = static_cast<int>(rest % 9);
            rest /= 9;
        }
        ComplexMatrix op = basis.lambda[alpha[0]];
        for (int i = 1; i < n_qutrits; ++i) op = tensor(op, basis.lambda[alpha[i]]);
        rho += Complex{scale * coeffs[idx], 0.0} * op;
    }
    return rho;
}

double w_from_coeffs(std::span<const double> coeffs, int n_qutrits,
                     std::span<const Vec8> points) {
    if (n_qutrits < 1 || n_qutrits > 3)
        fail("size", "coefficient tensor materialized only for N <= 3");
    if (coeffs.size() != pow9(n_qutrits)) fail("shape", "coefficient count must be 9^N");
    if (points.size() != static_cast<std::size_t>(n_qutrits))
        fail("shape", "need one pure point per qutrit");

    std::array<BarVector, 3> bars{};
    for (int i = 0; i < n_qutrits; ++i) bars[i] = bar_vector(points[i]);

    double sum = 0.0;
    for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
        if (coeffs[idx] == 0.0) continue;
        std::size_t rest = idx;
        double term = coeffs[idx];
        for (int i = n_qutrits - 1; i >= 0; --i) {
            term *= bars[i].nbar[rest % 9];
            rest /= 9;
        }
        sum += term;
    }
    return std::pow(16.0 / (9.0 * std::sqrt(3.0) * kPi * kPi), n_qutrits) * sum;
}

} // namespace qutritlab::multi_qutrit
