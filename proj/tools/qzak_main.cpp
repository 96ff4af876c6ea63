// qzak: batch driver for the quantum Zakharov lab.
//   qzak <command> --config <path> --out <dir> [--seed N] [--verify]
// Commands: simulate | limits | estimates | norms.
// Exit codes: 0 ok, 1 config error, 2 runtime divergence, 3 tolerance failure.

#include <cstdint>
#include <string>

#include "CLI11.hpp"
#include "qzak/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"qzak " + qzak::qzak_version() +
                 " - pseudospectral quantum Zakharov simulator and estimate lab"};
    app.require_subcommand(1);

    qzak::RunManifest manifest;
    std::uint64_t seed_value = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", manifest.config_path, "key=value run configuration file");
        sub->add_option("--out", manifest.out_dir, "output directory for CSV/JSON artifacts")
            ->required();
        sub->add_option("--seed", seed_value, "RNG seed (overrides the config key)");
        sub->add_flag("--verify", manifest.verify,
                      "enforce declared tolerances: exit 3 when a check fails");
    };

    CLI::App* sim = app.add_subcommand("simulate", "time-step the coupled system, "
                                                   "emit conservation diagnostics");
    add_common(sim);
    CLI::App* lim = app.add_subcommand("limits", "classical/adiabatic limit experiments "
                                                 "over an eps sweep");
    add_common(lim);
    CLI::App* est = app.add_subcommand("estimates", "bilinear kernel supremum scans and "
                                                    "figure data");
    add_common(est);
    est->add_option("--which", manifest.which, "kernel to scan: C1, C2 or C3");
    CLI::App* nor = app.add_subcommand("norms", "Sobolev / space-time norm diagnostics of a "
                                                "short run");
    add_common(nor);

    CLI11_PARSE(app, argc, argv);

    for (CLI::App* sub : {sim, lim, est, nor}) {
        if (sub->parsed()) {
            manifest.command = sub->get_name();
            if (sub->count("--seed") > 0) {
                manifest.seed_override = true;
                manifest.seed = seed_value;
            }
        }
    }
    return qzak::run_manifest(manifest);
}
