#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qutritlab/cli.hpp"

namespace cli = qutritlab::cli;

int main(int argc, char** argv) {
    CLI::App app{"Qutrit Bloch-vector toolkit: separability thresholds and certificates"};
    app.require_subcommand(1);

    cli::RunConfig cfg;
    double epsilon = 0.0;
    int n_qutrits = 2;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "RNG seed");
        sub->add_option("--samples", cfg.samples, "Monte-Carlo sample count");
        sub->add_option("--tol", cfg.tol, "numerical tolerance");
        sub->add_option("--out", cfg.out, "write the JSON report here instead of stdout");
    };

    CLI::App* verify = app.add_subcommand("verify-algebra", "operator-basis identity suite");
    add_common(verify);

    CLI::App* iso = app.add_subcommand("isotropic", "two-qutrit isotropic-state verdict");
    iso->add_option("--epsilon", epsilon, "mixing weight of the entangled state")->required();
    add_common(iso);

    CLI::App* bounds =
        app.add_subcommand("bounds", "N-qutrit separable-neighborhood thresholds");
    bounds->add_option("--n-qutrits", n_qutrits, "number of qutrits (1..5)")->required();
    add_common(bounds);

    CLI::App* mc = app.add_subcommand("montecarlo", "invariant-measure moments and volume");
    add_common(mc);

    CLI::App* ens = app.add_subcommand("ensemble-check", "twelve-member ensemble identity");
    add_common(ens);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return cli::kExitUsage;
    }

    try {
        cli::CommandResult result{cli::kExitUsage, {}};
        if (verify->parsed()) result = cli::cmd_verify_algebra();
        else if (iso->parsed()) result = cli::cmd_isotropic(epsilon, cfg);
        else if (bounds->parsed()) result = cli::cmd_bounds(n_qutrits);
        else if (mc->parsed()) result = cli::cmd_montecarlo(cfg);
        else if (ens->parsed()) result = cli::cmd_ensemble_check();
        cli::emit(result.report, cfg.out);
        return result.exit_code;
    } catch (const qutritlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitFail;
    }
}
