#include "qutritlab/two_qutrit.hpp"

#include <cmath>
#include <string>

namespace qutritlab::two_qutrit {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_epsilon(double eps) {
    if (!(eps >= 0.0 && eps <= 1.0)) fail("range", "epsilon must lie in [0, 1]");
}

const linalg::SubsystemShape kTwoQutrits{{3, 3}};

} // namespace

ComplexMatrix max_entangled() {
    ComplexMatrix rho(9);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) rho(a * 3 + a, b * 3 + b) = 1.0 / 3.0;
    return rho;
}

ComplexMatrix isotropic_density(const IsotropicState& s) {
    check_epsilon(s.epsilon);
    ComplexMatrix rho = Complex{s.epsilon, 0.0} * max_entangled();
    const double mixed = (1.0 - s.epsilon) / 9.0;
    for (std::size_t i = 0; i < 9; ++i) rho(i, i) += mixed;
    return rho;
}

ComplexMatrix isotropic_density(double epsilon) {
    return isotropic_density(IsotropicState{epsilon});
}

ExpansionCoeffs2 expansion_coeffs(const ComplexMatrix& rho) {
    if (rho.dim() != 9) fail("shape", "two-qutrit state must be 9x9");
    const auto& basis = su3::basis();
    ExpansionCoeffs2 out;
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) {
            const ComplexMatrix op = tensor(basis.lambda[a], basis.lambda[b]);
            out.c[a][b] = 2.25 * std::real(trace(rho * op));
        }
    return out;
}

ComplexMatrix reconstruct_from_coeffs(const ExpansionCoeffs2& coeffs) {
    const auto& basis = su3::basis();
    ComplexMatrix rho(9);
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) {
            if (coeffs.c[a][b] == 0.0) continue;
            rho += Complex{coeffs.c[a][b] / 9.0, 0.0} *
                   tensor(basis.lambda[a], basis.lambda[b]);
        }
    return rho;
}

double necessity_bound(const ExpansionCoeffs2& coeffs) {
    double s = 0.0;
    for (int j = 1; j <= 8; ++j) s += std::abs(coeffs.c[j][j]);
    return s / 3.0;
}

std::array<Complex, 9> ensemble_member_ket(int a, int b, Complex z) {
    const bool z_ok = (z == Complex{1, 0}) || (z == Complex{-1, 0}) || (z == kI) || (z == -kI);
    if (!(1 <= a && a < b && b <= 3) || !z_ok)
        fail("member", "need 1 <= a < b <= 3 and z in {+1, -1, +i, -i}");
    std::array<Complex, 3> left{}, right{};
    left[a - 1] = 1.0 / std::sqrt(2.0);
    left[b - 1] = z / std::sqrt(2.0);
    right[a - 1] = 1.0 / std::sqrt(2.0);
    right[b - 1] = std::conj(z) / std::sqrt(2.0);
    std::array<Complex, 9> ket{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) ket[i * 3 + j] = left[i] * right[j];
    return ket;
}

std::vector<EnsembleMember> canonical_ensemble() {
    static const std::array<Complex, 4> zs{Complex{1, 0}, Complex{-1, 0}, kI, -kI};
    std::vector<EnsembleMember> members;
    members.reserve(12);
    for (int a = 1; a <= 3; ++a)
        for (int b = a + 1; b <= 3; ++b)
            for (const Complex& z : zs) members.push_back({a, b, z, 1.0 / 12.0});
    return members;
}

ComplexMatrix ensemble_mixture() {
    ComplexMatrix rho(9);
    for (const auto& mem : canonical_ensemble()) {
        const auto ket = ensemble_member_ket(mem.a, mem.b, mem.z);
        for (std::size_t i = 0; i < 9; ++i)
            for (std::size_t j = 0; j < 9; ++j)
                rho(i, j) += mem.weight * ket[i] * std::conj(ket[j]);
    }
    return rho;
}

double ppt_min_eig(const ComplexMatrix& rho) {
    return linalg::min_eigenvalue(linalg::partial_transpose(rho, kTwoQutrits, 1));
}

double vidal_tarrach_threshold(std::span<const Complex> psi, std::size_t d1, std::size_t d2) {
    if (psi.size() != d1 * d2) fail("shape", "ket length must equal d1*d2");
    double norm2 = 0.0;
    for (const Complex& c : psi) norm2 += std::norm(c);
    if (std::abs(norm2 - 1.0) > 2e-12) fail("norm", "ket is not normalized");

    ComplexMatrix rho(d1 * d2);
    for (std::size_t i = 0; i < psi.size(); ++i)
        for (std::size_t j = 0; j < psi.size(); ++j) rho(i, j) = psi[i] * std::conj(psi[j]);

    const linalg::SubsystemShape shape{{d1, d2}};
    const double a1 =
        std::sqrt(hermitian_eigenvalues(linalg::partial_trace(rho, shape, 0)).back());
    const double a2 =
        std::sqrt(hermitian_eigenvalues(linalg::partial_trace(rho, shape, 1)).back());
    return 1.0 / (1.0 + static_cast<double>(d1 * d2) * a1 * a2);
}

SeparabilityReport separability_verdict(const IsotropicState& s) {
    check_epsilon(s.epsilon);
    const double eps = s.epsilon;

    SeparabilityReport rep;
    rep.family = "two_qutrit_isotropic";
    rep.epsilon = eps;
    rep.threshold = kSeparabilityThreshold;
    rep.threshold_exact = "1/4";

    if (std::abs(eps - kSeparabilityThreshold) <= kBoundaryTol) {
        rep.verdict = Verdict::Boundary;
        rep.separable = true;
    } else if (eps < kSeparabilityThreshold) {
        rep.verdict = Verdict::Separable;
        rep.separable = true;
    } else {
        rep.verdict = Verdict::Nonseparable;
        rep.separable = false;
    }

    const ComplexMatrix rho = isotropic_density(s);
    rep.witnesses.emplace_back("ppt_min_eig", ppt_min_eig(rho));
    rep.witnesses.emplace_back("necessity_bound", necessity_bound(expansion_coeffs(rho)));

    if (rep.separable) {
        // rho_eps = (1 - 4 eps) M_9 + 4 eps rho_{1/4}, and rho_{1/4} is the
        // equal-weight twelve-member ensemble.
        for (const auto& mem : canonical_ensemble()) {
            DecompositionEntry e;
            e.kind = DecompositionEntry::Kind::ProductPure;
            e.a = mem.a;
            e.b = mem.b;
            e.z = mem.z;
            e.weight = 4.0 * eps * mem.weight;
            rep.decomposition.push_back(e);
        }
        DecompositionEntry mixed;
        mixed.kind = DecompositionEntry::Kind::MaximallyMixed;
        mixed.weight = 1.0 - 4.0 * eps;
        rep.decomposition.push_back(mixed);
    }
    return rep;
}

} // namespace qutritlab::two_qutrit
