#include "qutritlab/qutrit_state.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qutritlab::state {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

bool in_range(double x, double lo, double hi) { return x >= lo && x <= hi; }

} // namespace

Ket3 params_to_ket(const PureStateParams& p) {
    if (!in_range(p.theta, 0.0, kHalfPi) || !in_range(p.phi, 0.0, kHalfPi) ||
        !in_range(p.chi1, 0.0, kTwoPi) || !in_range(p.chi2, 0.0, kTwoPi))
        fail("range", "pure-state coordinates outside their box");
    const double st = std::sin(p.theta), ct = std::cos(p.theta);
    const double cp = std::cos(p.phi), sp = std::sin(p.phi);
    return {std::polar(st * cp, p.chi1), std::polar(st * sp, p.chi2), Complex{ct, 0.0}};
}

BlochVector8 ket_to_bloch(const Ket3& ket) {
    double norm2 = 0.0;
    for (const auto& c : ket) norm2 += std::norm(c);
    if (std::abs(norm2 - 1.0) > 2e-12) fail("norm", "ket is not normalized");

    const Complex c01 = std::conj(ket[0]) * ket[1];
    const Complex c02 = std::conj(ket[0]) * ket[2];
    const Complex c12 = std::conj(ket[1]) * ket[2];
    const double p0 = std::norm(ket[0]), p1 = std::norm(ket[1]), p2 = std::norm(ket[2]);
    const double h = std::sqrt(3.0); // = sqrt(3)/2 * <lambda_j>, expectations carry the 2

    BlochVector8 n;
    n[0] = h * c01.real();
    n[1] = h * c01.imag();
    n[2] = 0.5 * h * (p0 - p1);
    n[3] = h * c02.real();
    n[4] = h * c02.imag();
    n[5] = h * c12.real();
    n[6] = h * c12.imag();
    n[7] = 0.5 * (p0 + p1 - 2.0 * p2);
    return n;
}

ComplexMatrix bloch_operator(const Vec8& c) {
    ComplexMatrix out = su3::bloch_dot_lambda(c);
    for (std::size_t i = 0; i < 3; ++i) out(i, i) += 1.0;
    out *= Complex{1.0 / 3.0, 0.0};
    return out;
}

ComplexMatrix bloch_to_density(const Vec8& c) {
    ComplexMatrix rho = bloch_operator(c);
    const double lo = linalg::min_eigenvalue(rho);
    if (lo < -linalg::default_psd_tol(rho))
        fail("not_a_state", "operator has minimum eigenvalue " + std::to_string(lo));
    return rho;
}

ComplexMatrix pure_projector(const Vec8& n) {
    Vec8 c;
    const double s3 = std::sqrt(3.0);
    for (int j = 0; j < 8; ++j) c[j] = s3 * n[j];
    return bloch_operator(c);
}

ComplexMatrix ket_density(const Ket3& ket) {
    ComplexMatrix rho(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) rho(i, j) = ket[i] * std::conj(ket[j]);
    return rho;
}

std::array<double, 9> density_to_bloch(const ComplexMatrix& rho) {
    if (rho.dim() != 3) fail("shape", "qutrit density must be 3x3");
    const auto& b = su3::basis();
    std::array<double, 9> c;
    for (int a = 0; a < 9; ++a) c[a] = 1.5 * std::real(trace(rho * b.lambda[a]));
    return c;
}

bool is_pure(const Vec8& n, double tol) {
    if (std::abs(su3::dot(n, n) - 1.0) > tol) return false;
    const Vec8 nn = su3::star(n, n);
    double diff2 = 0.0;
    for (int j = 0; j < 8; ++j) diff2 += (nn[j] - n[j]) * (nn[j] - n[j]);
    return std::sqrt(diff2) <= tol;
}

double overlap(const Vec8& n, const Vec8& m) { return (1.0 + 2.0 * su3::dot(n, m)) / 3.0; }

PureStateParams canonical_params(const PureStateParams& p) {
    constexpr double eps = 1e-14;
    PureStateParams q = p;
    if (q.theta <= eps) {
        q.phi = q.chi1 = q.chi2 = 0.0;
    } else {
        if (q.phi <= eps) q.chi2 = 0.0;
        if (q.phi >= kHalfPi - eps) q.chi1 = 0.0;
    }
    return q;
}

} // namespace qutritlab::state
