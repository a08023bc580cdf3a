#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qutritlab/two_qutrit.hpp"
#include "test_util.hpp"

using namespace qutritlab;
using linalg::Complex;
using linalg::ComplexMatrix;

namespace {
const Complex I{0, 1};
const linalg::SubsystemShape kShape{{3, 3}};
}

TEST_CASE("maximally entangled state") {
    const auto psi = two_qutrit::max_entangled();
    CHECK(std::abs(trace(psi) - Complex{1, 0}) < 1e-15);

    // Rank one: eigenvalues {0,...,0,1}.
    const auto eig = hermitian_eigenvalues(psi);
    CHECK(eig.back() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(eig[7]) < 1e-13);

    // Both marginals are maximally mixed.
    for (std::size_t keep : {0u, 1u}) {
        const auto marginal = partial_trace(psi, kShape, keep);
        for (double v : hermitian_eigenvalues(marginal))
            CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    }

    const auto coeffs = two_qutrit::expansion_coeffs(psi);
    CHECK(coeffs.c[1][1] == doctest::Approx(1.5).epsilon(1e-13));
    CHECK(coeffs.c[2][2] == doctest::Approx(-1.5).epsilon(1e-13));
    CHECK(coeffs.c[5][5] == doctest::Approx(-1.5).epsilon(1e-13));
    CHECK(coeffs.c[8][8] == doctest::Approx(1.5).epsilon(1e-13));
}

TEST_CASE("isotropic density endpoints") {
    CHECK(max_abs_diff(two_qutrit::isotropic_density(0.0),
                       Complex{1.0 / 9.0, 0} * ComplexMatrix::identity(9)) < 1e-16);
    CHECK(max_abs_diff(two_qutrit::isotropic_density(1.0), two_qutrit::max_entangled()) <
          1e-16);
    CHECK_THROWS_WITH_AS(two_qutrit::isotropic_density(1.5), doctest::Contains("range"),
                         Error);
}

TEST_CASE("expansion coefficients") {
    const auto m9 = Complex{1.0 / 9.0, 0} * ComplexMatrix::identity(9);
    const auto cm = two_qutrit::expansion_coeffs(m9);
    CHECK(cm.c[0][0] == doctest::Approx(1.5).epsilon(1e-13));
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b)
            if (a != 0 || b != 0) CHECK(std::abs(cm.c[a][b]) < 1e-13);

    // Diagonal sign pattern (+,-,+,+,-,+,-,+) times 3 eps/2 on the family.
    const double eps = 0.37;
    const auto c = two_qutrit::expansion_coeffs(two_qutrit::isotropic_density(eps));
    const double expected[9] = {0, 1, -1, 1, 1, -1, 1, -1, 1};
    CHECK(c.c[0][0] == doctest::Approx(1.5).epsilon(1e-13));
    for (int j = 1; j < 9; ++j) {
        CHECK(c.c[j][j] == doctest::Approx(expected[j] * 1.5 * eps).epsilon(1e-12));
        CHECK(std::abs(c.c[0][j]) < 1e-13);
        CHECK(std::abs(c.c[j][0]) < 1e-13);
        for (int k = 1; k < 9; ++k)
            if (j != k) CHECK(std::abs(c.c[j][k]) < 1e-12);
    }
}

TEST_CASE("expansion roundtrip on random states") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 5; ++rep) {
        const auto rho = testutil::random_density(9, rng);
        const auto coeffs = two_qutrit::expansion_coeffs(rho);
        CHECK(max_abs_diff(two_qutrit::reconstruct_from_coeffs(coeffs), rho) < 1e-12);
    }
}

TEST_CASE("necessity bound") {
    auto bound_at = [](double eps) {
        return two_qutrit::necessity_bound(
            two_qutrit::expansion_coeffs(two_qutrit::isotropic_density(eps)));
    };
    CHECK(bound_at(0.25) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bound_at(0.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(bound_at(0.5) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("ensemble members") {
    const auto ket = two_qutrit::ensemble_member_ket(1, 2, Complex{1, 0});
    // (|11> + |12> + |21> + |22>)/2
    for (std::size_t idx : {0u, 1u, 3u, 4u})
        CHECK(std::abs(ket[idx] - Complex{0.5, 0}) < 1e-15);
    for (std::size_t idx : {2u, 5u, 6u, 7u, 8u}) CHECK(std::abs(ket[idx]) < 1e-15);

    // Phase sums that kill the cross terms: sum z = sum z^2 = 0.
    Complex sz{}, sz2{};
    for (const Complex z : {Complex{1, 0}, Complex{-1, 0}, I, -I}) {
        sz += z;
        sz2 += z * z;
    }
    CHECK(std::abs(sz) == 0.0);
    CHECK(std::abs(sz2) == 0.0);

    for (const auto& mem : two_qutrit::canonical_ensemble()) {
        const auto k = two_qutrit::ensemble_member_ket(mem.a, mem.b, mem.z);
        double norm2 = 0.0;
        for (const auto& c : k) norm2 += std::norm(c);
        CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(mem.weight == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
    }
    CHECK(two_qutrit::canonical_ensemble().size() == 12);

    CHECK_THROWS_WITH_AS(two_qutrit::ensemble_member_ket(2, 1, Complex{1, 0}),
                         doctest::Contains("member"), Error);
    CHECK_THROWS_WITH_AS(two_qutrit::ensemble_member_ket(1, 2, Complex{0.5, 0.5}),
                         doctest::Contains("member"), Error);
}

TEST_CASE("ensemble mixture hits the eps = 1/4 state exactly") {
    const auto mix = two_qutrit::ensemble_mixture();
    CHECK(std::abs(trace(mix) - Complex{1, 0}) < 1e-14);
    CHECK(max_abs_diff(mix, two_qutrit::isotropic_density(0.25)) < 1e-13);
    CHECK(two_qutrit::ppt_min_eig(mix) > -1e-12);
    for (std::size_t keep : {0u, 1u})
        CHECK(max_abs_diff(partial_trace(mix, kShape, keep),
                           Complex{1.0 / 3.0, 0} * ComplexMatrix::identity(3)) < 1e-13);
}

TEST_CASE("ppt minimum eigenvalue on the family") {
    CHECK(two_qutrit::ppt_min_eig(two_qutrit::isotropic_density(0.0)) ==
          doctest::Approx(1.0 / 9.0).epsilon(1e-12));
    CHECK(std::abs(two_qutrit::ppt_min_eig(two_qutrit::isotropic_density(0.25))) < 1e-12);
    CHECK(two_qutrit::ppt_min_eig(two_qutrit::isotropic_density(0.3)) ==
          doctest::Approx(-1.0 / 45.0).epsilon(1e-10));

    // Analytic spectrum (1-eps)/9 - eps/3 across the grid.
    for (int i = 0; i <= 100; ++i) {
        const double eps = i / 100.0;
        const double expected = (1.0 - eps) / 9.0 - eps / 3.0;
        CHECK(std::abs(two_qutrit::ppt_min_eig(two_qutrit::isotropic_density(eps)) -
                       expected) < 1e-11);
    }
}

TEST_CASE("vidal-tarrach thresholds") {
    std::vector<Complex> psi(9);
    for (int a = 0; a < 3; ++a) psi[a * 3 + a] = 1.0 / std::sqrt(3.0);
    CHECK(two_qutrit::vidal_tarrach_threshold(psi, 3, 3) ==
          doctest::Approx(0.25).epsilon(1e-12));

    std::vector<Complex> prod(9);
    prod[0] = 1.0;
    CHECK(two_qutrit::vidal_tarrach_threshold(prod, 3, 3) ==
          doctest::Approx(0.1).epsilon(1e-12));

    std::vector<Complex> bell(4);
    bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
    CHECK(two_qutrit::vidal_tarrach_threshold(bell, 2, 2) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    std::vector<Complex> bad(9);
    bad[0] = 0.5;
    CHECK_THROWS_WITH_AS(two_qutrit::vidal_tarrach_threshold(bad, 3, 3),
                         doctest::Contains("norm"), Error);
}

TEST_CASE("separability verdicts") {
    const auto sep = two_qutrit::separability_verdict({0.1});
    CHECK(sep.verdict == Verdict::Separable);
    CHECK(sep.separable);
    CHECK(sep.threshold == 0.25);
    CHECK(sep.threshold_exact == "1/4");

    const auto boundary = two_qutrit::separability_verdict({0.25});
    CHECK(boundary.verdict == Verdict::Boundary);
    CHECK(boundary.separable);

    const auto ent = two_qutrit::separability_verdict({0.251});
    CHECK(ent.verdict == Verdict::Nonseparable);
    CHECK_FALSE(ent.separable);
    CHECK(ent.decomposition.empty());
    bool found_ppt = false;
    for (const auto& [name, value] : ent.witnesses)
        if (name == "ppt_min_eig") {
            found_ppt = true;
            CHECK(value < 0.0);
        }
    CHECK(found_ppt);

    const auto trivial = two_qutrit::separability_verdict({0.0});
    CHECK(trivial.verdict == Verdict::Separable);
}

TEST_CASE("reported decomposition re-mixes to the state") {
    for (double eps : {0.0, 0.1, 0.25}) {
        const auto rep = two_qutrit::separability_verdict({eps});
        REQUIRE_FALSE(rep.decomposition.empty());
        ComplexMatrix mix(9);
        double total_weight = 0.0;
        for (const auto& entry : rep.decomposition) {
            total_weight += entry.weight;
            if (entry.kind == DecompositionEntry::Kind::MaximallyMixed) {
                for (std::size_t i = 0; i < 9; ++i) mix(i, i) += entry.weight / 9.0;
            } else {
                const auto ket = two_qutrit::ensemble_member_ket(entry.a, entry.b, entry.z);
                for (std::size_t i = 0; i < 9; ++i)
                    for (std::size_t j = 0; j < 9; ++j)
                        mix(i, j) += entry.weight * ket[i] * std::conj(ket[j]);
            }
            CHECK(entry.weight >= -1e-15);
        }
        CHECK(total_weight == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(max_abs_diff(mix, two_qutrit::isotropic_density(eps)) < 1e-12);
    }
}

TEST_CASE("verdict agreement across witnesses on the family grid") {
    for (int i = 0; i <= 100; ++i) {
        const double eps = i / 100.0;
        const auto rho = two_qutrit::isotropic_density(eps);
        const bool ppt_negative = two_qutrit::ppt_min_eig(rho) < -1e-11;
        const bool over_necessity =
            two_qutrit::necessity_bound(two_qutrit::expansion_coeffs(rho)) > 1.0 + 1e-11;
        const bool beyond = eps > 0.25 + 1e-11;
        CHECK(ppt_negative == beyond);
        CHECK(over_necessity == beyond);
    }
}
