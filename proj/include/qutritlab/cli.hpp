#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "qutritlab/report.hpp"
#include "qutritlab/su3.hpp"

namespace qutritlab::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "qutritlab/1";

// 0 = pass, 1 = verification failure, 2 = usage error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    std::uint64_t seed = 0;
    std::size_t samples = 100000;
    double tol = 1e-10;
    std::string out; // empty writes to stdout
};

struct CommandResult {
    int exit_code;
    Json report;
};

// Operator-basis identity suite: orthogonality, product reconstruction,
// f/d symmetries, tracelessness, transition-operator expansions. The basis
// parameter is injectable so tests can corrupt a generator.
CommandResult cmd_verify_algebra();
CommandResult cmd_verify_algebra(const su3::GellMannBasis& basis);

// Verdict for the two-qutrit isotropic state, with PPT, necessity and
// sampled-w witnesses plus the explicit decomposition when separable.
CommandResult cmd_isotropic(double epsilon, const RunConfig& cfg);

// Lower/upper separability thresholds around the N-qutrit maximally mixed
// state, as floats and exact rationals.
CommandResult cmd_bounds(int n_qutrits);

// Invariant-measure moment estimates at 3-sigma plus the deterministic
// volume quadrature.
CommandResult cmd_montecarlo(const RunConfig& cfg);

// Rebuilds the twelve-member product ensemble and compares it with
// (3/4) M_9 + (1/4) |Psi><Psi|.
CommandResult cmd_ensemble_check();

Json report_to_json(const SeparabilityReport& rep);

// "+1", "-1", "+i", "-i" for the canonical ensemble phases.
std::string phase_label(linalg::Complex z);

// Serializes the report to `cfg.out` (or stdout when empty).
void emit(const Json& report, const std::string& out_path);

} // namespace qutritlab::cli
