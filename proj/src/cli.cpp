#include "qutritlab/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>

#include "qutritlab/geometry.hpp"
#include "qutritlab/multi_qutrit.hpp"
#include "qutritlab/qutrit_state.hpp"
#include "qutritlab/two_qutrit.hpp"

namespace qutritlab::cli {

namespace {

constexpr double kIdentityTol = 1e-12;

Json make_report(const std::string& command) {
    Json j;
    j["schema"] = kSchema;
    j["command"] = command;
    return j;
}

std::string rational(long num, long den) {
    return std::to_string(num) + "/" + std::to_string(den);
}

Json usage_error(const std::string& command, const std::string& message) {
    Json j = make_report(command);
    j["error"] = message;
    j["pass"] = false;
    return j;
}

} // namespace

std::string phase_label(linalg::Complex z) {
    if (z == linalg::Complex{1, 0}) return "+1";
    if (z == linalg::Complex{-1, 0}) return "-1";
    if (z == linalg::Complex{0, 1}) return "+i";
    if (z == linalg::Complex{0, -1}) return "-i";
    return "?";
}

Json report_to_json(const SeparabilityReport& rep) {
    Json j;
    j["family"] = rep.family;
    j["epsilon"] = rep.epsilon;
    j["threshold"] = {{"value", rep.threshold}, {"exact", rep.threshold_exact}};
    j["verdict"] = to_string(rep.verdict);
    j["separable"] = rep.separable;
    j["boundary"] = rep.verdict == Verdict::Boundary;
    Json w = Json::object();
    for (const auto& [name, value] : rep.witnesses) w[name] = value;
    j["witnesses"] = w;
    Json decomp = Json::array();
    for (const auto& e : rep.decomposition) {
        Json d;
        if (e.kind == DecompositionEntry::Kind::ProductPure) {
            d["kind"] = "product_pure";
            d["a"] = e.a;
            d["b"] = e.b;
            d["z"] = {e.z.real(), e.z.imag()};
            d["z_label"] = phase_label(e.z);
        } else {
            d["kind"] = "maximally_mixed";
        }
        d["weight"] = e.weight;
        decomp.push_back(d);
    }
    j["decomposition"] = decomp;
    return j;
}

CommandResult cmd_verify_algebra() { return cmd_verify_algebra(su3::basis()); }

CommandResult cmd_verify_algebra(const su3::GellMannBasis& basis) {
    using linalg::ComplexMatrix;
    const linalg::Complex i1{0.0, 1.0};
    Json j = make_report("verify-algebra");
    Json residuals;
    std::vector<std::string> failures;

    // tr(l_a l_b) = 2 d_ab over all 81 pairs.
    Json per_pair = Json::array();
    double orth_max = 0.0;
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) {
            const double expected = (a == b) ? 2.0 : 0.0;
            const double r = std::abs(trace(basis.lambda[a] * basis.lambda[b]) - expected);
            per_pair.push_back(r);
            orth_max = std::max(orth_max, r);
        }
    residuals["orthogonality"] = {{"pairs", 81}, {"max", orth_max}, {"per_pair", per_pair}};
    if (orth_max >= kIdentityTol) failures.push_back("orthogonality");

    double traceless_max = 0.0;
    for (int a = 1; a < 9; ++a)
        traceless_max = std::max(traceless_max, std::abs(trace(basis.lambda[a])));
    residuals["traceless"] = traceless_max;
    if (traceless_max >= kIdentityTol) failures.push_back("traceless");

    // l_j l_k = (2/3) d_jk + sum_l (d_jkl + i f_jkl) l_l over all 64 pairs.
    const auto sc = su3::compute_structure_constants(basis);
    double genprod_max = 0.0;
    for (int jj = 0; jj < 8; ++jj)
        for (int kk = 0; kk < 8; ++kk) {
            ComplexMatrix rhs(3);
            if (jj == kk)
                rhs = linalg::Complex{2.0 / 3.0, 0.0} * ComplexMatrix::identity(3);
            for (int ll = 0; ll < 8; ++ll) {
                const linalg::Complex coef{sc.d[jj][kk][ll], sc.f[jj][kk][ll]};
                if (coef != linalg::Complex{}) rhs += coef * basis.lambda[ll + 1];
            }
            genprod_max = std::max(
                genprod_max, max_abs_diff(basis.lambda[jj + 1] * basis.lambda[kk + 1], rhs));
        }
    residuals["product_reconstruction"] = {{"pairs", 64}, {"max", genprod_max}};
    if (genprod_max >= kIdentityTol) failures.push_back("product_reconstruction");

    double f_anti = 0.0, d_symm = 0.0;
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            for (int c = 0; c < 8; ++c) {
                f_anti = std::max(f_anti, std::abs(sc.f[a][b][c] + sc.f[b][a][c]));
                f_anti = std::max(f_anti, std::abs(sc.f[a][b][c] + sc.f[a][c][b]));
                d_symm = std::max(d_symm, std::abs(sc.d[a][b][c] - sc.d[b][a][c]));
                d_symm = std::max(d_symm, std::abs(sc.d[a][b][c] - sc.d[a][c][b]));
            }
    residuals["f_antisymmetry"] = f_anti;
    residuals["d_symmetry"] = d_symm;
    if (f_anti >= kIdentityTol) failures.push_back("f_antisymmetry");
    if (d_symm >= kIdentityTol) failures.push_back("d_symmetry");

    // Transition operators |a><b| and basis projectors in the lambda basis.
    const double s3 = std::sqrt(3.0);
    auto unit = [](int r, int c) {
        ComplexMatrix m(3);
        m(r, c) = 1.0;
        return m;
    };
    const linalg::Complex half{0.5, 0.0};
    double trans_max = 0.0;
    auto check = [&](const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
        trans_max = std::max(trans_max, max_abs_diff(lhs, rhs));
    };
    check(unit(0, 1), half * (basis.lambda[1] + i1 * basis.lambda[2]));
    check(unit(1, 0), half * (basis.lambda[1] - i1 * basis.lambda[2]));
    check(unit(0, 2), half * (basis.lambda[4] + i1 * basis.lambda[5]));
    check(unit(2, 0), half * (basis.lambda[4] - i1 * basis.lambda[5]));
    check(unit(1, 2), half * (basis.lambda[6] + i1 * basis.lambda[7]));
    check(unit(2, 1), half * (basis.lambda[6] - i1 * basis.lambda[7]));
    const linalg::Complex third{1.0 / 3.0, 0.0};
    check(unit(0, 0), third * (ComplexMatrix::identity(3) +
                               linalg::Complex{s3, 0} *
                                   (linalg::Complex{s3 / 2.0, 0} * basis.lambda[3] +
                                    half * basis.lambda[8])));
    check(unit(1, 1), third * (ComplexMatrix::identity(3) +
                               linalg::Complex{s3, 0} *
                                   (linalg::Complex{-s3 / 2.0, 0} * basis.lambda[3] +
                                    half * basis.lambda[8])));
    check(unit(2, 2),
          third * (ComplexMatrix::identity(3) - linalg::Complex{s3, 0} * basis.lambda[8]));
    residuals["transition_operators"] = trans_max;
    if (trans_max >= kIdentityTol) failures.push_back("transition_operators");

    j["config"] = Json::object();
    j["residuals"] = residuals;
    j["results"] = {{"failures", failures}, {"identity_tol", kIdentityTol}};
    const bool pass = failures.empty();
    j["pass"] = pass;
    return {pass ? kExitPass : kExitFail, j};
}

CommandResult cmd_isotropic(double epsilon, const RunConfig& cfg) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        return {kExitUsage, usage_error("isotropic", "epsilon must lie in [0, 1]")};

    Json j = make_report("isotropic");
    j["config"] = {{"epsilon", epsilon},
                   {"seed", cfg.seed},
                   {"samples", cfg.samples},
                   {"tol", cfg.tol}};

    SeparabilityReport rep = two_qutrit::separability_verdict({epsilon});

    // Sampled floor of the expansion function over product points.
    if (cfg.samples > 0) {
        const auto params = geometry::sample_pure({cfg.seed, 4096}, 2 * cfg.samples);
        const auto rho = multi_qutrit::make_state(2, two_qutrit::isotropic_density(epsilon));
        double w_min = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < cfg.samples; ++i) {
            const std::array<su3::Vec8, 2> pts{
                state::ket_to_bloch(state::params_to_ket(params[2 * i])),
                state::ket_to_bloch(state::params_to_ket(params[2 * i + 1]))};
            w_min = std::min(w_min, multi_qutrit::expansion_function_w(rho, pts));
        }
        rep.witnesses.emplace_back("w_min_sampled", w_min);
    }

    j["results"] = report_to_json(rep);
    j["residuals"] = Json::object();
    j["pass"] = true; // a verdict is a result, not a failure
    return {kExitPass, j};
}

CommandResult cmd_bounds(int n_qutrits) {
    if (n_qutrits < 1 || n_qutrits > multi_qutrit::kMaxQutrits)
        return {kExitUsage, usage_error("bounds", "n-qutrits must lie in 1..5")};

    Json j = make_report("bounds");
    j["config"] = {{"n_qutrits", n_qutrits}};

    long lower_den = 1;
    for (int i = 0; i < 2 * n_qutrits - 1; ++i) lower_den *= 3;
    lower_den += 1;
    const double lower = multi_qutrit::separable_lower_threshold(n_qutrits);

    Json results;
    results["separable_below"] = {{"value", lower}, {"exact", rational(1, lower_den)}};
    if (n_qutrits % 2 == 0) {
        long upper_den = 1;
        for (int i = 0; i < n_qutrits / 2; ++i) upper_den *= 3;
        upper_den += 1;
        const double upper = multi_qutrit::nonseparable_upper_threshold(n_qutrits);
        results["nonseparable_above"] = {{"value", upper}, {"exact", rational(1, upper_den)}};
        results["gap"] = upper - lower;
    } else {
        results["nonseparable_above"] = "n/a (odd N)";
    }
    results["w_lower_bound"] = multi_qutrit::w_lower_bound(n_qutrits);

    j["results"] = results;
    j["residuals"] = Json::object();
    j["pass"] = true;
    return {kExitPass, j};
}

CommandResult cmd_montecarlo(const RunConfig& cfg) {
    if (cfg.samples < 1000)
        return {kExitUsage, usage_error("montecarlo", "need at least 1000 samples")};

    Json j = make_report("montecarlo");
    j["config"] = {{"seed", cfg.seed}, {"samples", cfg.samples}, {"tol", cfg.tol}};

    const auto est = geometry::estimate_moments({cfg.seed, 4096}, cfg.samples);

    bool first_pass = true;
    Json first = Json::array();
    for (int k = 0; k < 8; ++k) {
        first.push_back({{"mean", est.first[k]}, {"se", est.first_se[k]}});
        if (std::abs(est.first[k]) > 3.0 * est.first_se[k]) first_pass = false;
    }

    bool second_pass = true;
    Json second = Json::array();
    for (int a = 0; a < 8; ++a) {
        Json row = Json::array();
        for (int b = 0; b < 8; ++b) {
            const double target = (a == b) ? 0.125 : 0.0;
            row.push_back({{"mean", est.second[a][b]}, {"se", est.second_se[a][b]}});
            if (std::abs(est.second[a][b] - target) > 3.0 * est.second_se[a][b])
                second_pass = false;
        }
        second.push_back(row);
    }

    const double volume = geometry::total_volume_quadrature({64, 64, 64, 64});
    const double target = 4.5 * std::numbers::pi * std::numbers::pi;
    const double vol_rel_err = std::abs(volume - target) / target;
    const bool volume_pass = vol_rel_err < 1e-3;

    j["results"] = {
        {"first_moments", first},
        {"first_moments_pass", first_pass},
        {"second_moments", second},
        {"second_moments_target", "delta_jk / 8"},
        {"second_moments_pass", second_pass},
        {"volume",
         {{"value", volume}, {"target", target}, {"grid", 64}, {"rel_error", vol_rel_err},
          {"pass", volume_pass}}},
    };
    j["residuals"] = Json::object();
    const bool pass = first_pass && second_pass && volume_pass;
    j["pass"] = pass;
    return {pass ? kExitPass : kExitFail, j};
}

CommandResult cmd_ensemble_check() {
    Json j = make_report("ensemble-check");
    j["config"] = Json::object();

    const auto mixture = two_qutrit::ensemble_mixture();
    const auto target = two_qutrit::isotropic_density(0.25);
    const double residual = max_abs_diff(mixture, target);

    Json members = Json::array();
    for (const auto& mem : two_qutrit::canonical_ensemble()) {
        const auto ket = two_qutrit::ensemble_member_ket(mem.a, mem.b, mem.z);
        double norm2 = 0.0;
        for (const auto& c : ket) norm2 += std::norm(c);
        members.push_back({{"a", mem.a},
                           {"b", mem.b},
                           {"z", {mem.z.real(), mem.z.imag()}},
                           {"z_label", phase_label(mem.z)},
                           {"weight", mem.weight},
                           {"weight_exact", "1/12"},
                           {"norm", std::sqrt(norm2)}});
    }

    j["results"] = {{"members", members},
                    {"target", "(3/4) M_9 + (1/4) |Psi><Psi|"}};
    j["residuals"] = {{"max_elementwise", residual}};
    const bool pass = residual < 1e-12;
    j["pass"] = pass;
    return {pass ? kExitPass : kExitFail, j};
}

void emit(const Json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) fail("range", "cannot open output file " + out_path);
    f << report.dump(2) << "\n";
}

} // namespace qutritlab::cli
