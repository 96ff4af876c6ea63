#pragma once

#include <cstdint>
#include <string>

namespace qzak {

// Parsed command line for one batch run.  Identical manifest (plus config file
// contents) implies byte-identical CSV artifacts.
struct RunManifest {
    std::string command;      // simulate | limits | estimates | norms
    std::string config_path;  // empty means "all defaults"
    std::string out_dir;
    bool seed_override = false;  // --seed N given (wins over the config key)
    std::uint64_t seed = 0;
    bool verify = false;  // enforce declared tolerances via the exit code
    std::string which;    // estimates only: kernel override (C1 | C2 | C3)
};

std::string qzak_version();

// Dispatches to the requested experiment, writes CSV/JSON artifacts plus a
// machine-readable summary.json into out_dir, and returns the process exit
// code: 0 = ok, 1 = config error (message names the offending field),
// 2 = runtime divergence / blow-up, 3 = tolerance failure under --verify.
int run_manifest(const RunManifest& m);

// Figure-style data files: region boundary polyline and the mixed-phase
// profiles f_{tau,xi} for the three modulation cases, written into out_dir.
void emit_plotdata(const std::string& out_dir, double eps = 1.0);

}  // namespace qzak
