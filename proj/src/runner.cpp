#include "qzak/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "qzak/config.hpp"
#include "qzak/conservation.hpp"
#include "qzak/dynamics.hpp"
#include "qzak/estimates.hpp"
#include "qzak/io.hpp"
#include "qzak/limits.hpp"
#include "qzak/norms.hpp"
#include "qzak/state.hpp"
#include "qzak/symbols.hpp"

namespace qzak {

namespace {

constexpr const char* kVersion = "0.3.0";
constexpr double kPi = 3.14159265358979323846;

struct Check {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

bool all_pass(const std::vector<Check>& checks) {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

int threads_from_env() {
    const char* v = std::getenv("QZAK_THREADS");
    if (!v || !*v) return 1;
    char* end = nullptr;
    long t = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || t < 1) return 1;
    return static_cast<int>(std::min<long>(t, 64));
}

std::string join_path(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

void write_summary(const std::string& out_dir, const RunManifest& m, std::uint64_t effective_seed,
                   const std::vector<Check>& checks) {
    nlohmann::json j;
    j["command"] = m.command;
    j["version"] = kVersion;
    j["seed"] = effective_seed;
    j["verify"] = m.verify;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        arr.push_back({{"name", c.name},
                       {"value", c.value},
                       {"threshold", c.threshold},
                       {"pass", c.pass}});
    }
    j["checks"] = arr;
    j["all_pass"] = all_pass(checks);
    std::ofstream out(join_path(out_dir, "summary.json"), std::ios::binary);
    if (!out) throw std::runtime_error("cannot open summary.json for writing");
    out << j.dump(2) << '\n';
}

int finish(const std::string& out_dir, const RunManifest& m, std::uint64_t seed,
           const std::vector<Check>& checks, int base_status = 0) {
    write_summary(out_dir, m, seed, checks);
    if (base_status != 0) return base_status;
    if (m.verify && !all_pass(checks)) {
        for (const auto& c : checks) {
            if (!c.pass) {
                std::fprintf(stderr, "tolerance failure: %s = %.6g (threshold %.6g)\n",
                             c.name.c_str(), c.value, c.threshold);
            }
        }
        return 3;
    }
    return 0;
}

// --- profile descriptors -----------------------------------------------------

ProfileKind parse_profile_kind(const std::string& key, const std::string& name) {
    if (name == "zero") return ProfileKind::zero;
    if (name == "gaussian") return ProfileKind::gaussian;
    if (name == "soliton") return ProfileKind::soliton;
    if (name == "plane_wave") return ProfileKind::plane_wave;
    if (name == "cosine") return ProfileKind::cosine;
    if (name == "random_sobolev") return ProfileKind::random_sobolev;
    if (name == "adiabatic") return ProfileKind::adiabatic;
    throw std::invalid_argument(key + ": unknown profile '" + name + "'");
}

std::string profile_kind_name(ProfileKind k) {
    switch (k) {
        case ProfileKind::zero: return "zero";
        case ProfileKind::gaussian: return "gaussian";
        case ProfileKind::soliton: return "soliton";
        case ProfileKind::plane_wave: return "plane_wave";
        case ProfileKind::cosine: return "cosine";
        case ProfileKind::random_sobolev: return "random_sobolev";
        case ProfileKind::adiabatic: return "adiabatic";
    }
    return "zero";
}

ProfileSpec parse_profile(const ConfigMap& conf, const std::string& prefix,
                          const ProfileSpec& fallback) {
    ProfileSpec p = fallback;
    const std::string key = prefix + ".profile";
    p.kind = parse_profile_kind(key, conf.get_string(key, profile_kind_name(fallback.kind)));
    p.amplitude = conf.get_double(prefix + ".amplitude", p.amplitude);
    p.width = conf.get_double(prefix + ".width", p.width);
    p.center = conf.get_double(prefix + ".center", p.center);
    p.wavenumber = static_cast<int>(conf.get_int(prefix + ".wavenumber", p.wavenumber));
    p.exponent = conf.get_double(prefix + ".exponent", p.exponent);
    return p;
}

std::uint64_t effective_seed(const RunManifest& m, const ConfigMap& conf,
                             const std::string& seed_key) {
    if (m.seed_override) return m.seed;
    return static_cast<std::uint64_t>(conf.get_int(seed_key, 0));
}

// --- simulate ----------------------------------------------------------------

int cmd_simulate(const RunManifest& m, const ConfigMap& conf) {
    SimConfig cfg;
    cfg.n = static_cast<int>(conf.get_int("simulate.grid_n", cfg.n));
    cfg.length = conf.get_double("simulate.length", cfg.length);
    cfg.eps = conf.get_double("simulate.eps", cfg.eps);
    cfg.dt = conf.get_double("simulate.dt", cfg.dt);
    cfg.t_final = conf.get_double("simulate.t_final", cfg.t_final);
    const std::string integ = conf.get_string("simulate.integrator", "strang");
    if (integ == "strang") {
        cfg.integrator = Integrator::strang;
    } else if (integ == "picard") {
        cfg.integrator = Integrator::picard;
    } else {
        throw std::invalid_argument("simulate.integrator: must be 'strang' or 'picard', got '" +
                                    integ + "'");
    }
    cfg.record_stride = static_cast<int>(conf.get_int("simulate.record_stride", cfg.record_stride));
    cfg.picard_nodes = static_cast<int>(conf.get_int("simulate.picard_nodes", cfg.picard_nodes));
    cfg.picard_iters = static_cast<int>(conf.get_int("simulate.picard_iters", cfg.picard_iters));
    cfg.seed = effective_seed(m, conf, "simulate.seed");

    ProfileSpec gauss_default;
    gauss_default.kind = ProfileKind::gaussian;
    gauss_default.amplitude = 1.0;
    gauss_default.width = 2.0;
    cfg.e0 = parse_profile(conf, "simulate.e0", gauss_default);
    cfg.n0 = parse_profile(conf, "simulate.n0", ProfileSpec{});
    cfg.nt0 = parse_profile(conf, "simulate.nt0", ProfileSpec{});

    validate(cfg);
    Trajectory traj = simulate(cfg);
    if (traj.frames.empty()) {
        throw std::runtime_error("simulate: no frames recorded");
    }

    const SpectralGrid g = make_grid(cfg.n, cfg.length);
    const DispersionSymbols sy = make_symbols(g, cfg.eps);

    FrameResiduals fr;
    if (!traj.blew_up && traj.frames.size() >= 3) {
        fr = frame_residuals(g, sy, traj);
    } else {
        fr.mass_l2.assign(traj.frames.size(), 0.0);
        fr.momentum_l2.assign(traj.frames.size(), 0.0);
    }

    CsvWriter csv(join_path(m.out_dir, "conservation.csv"),
                  {"t", "mass", "hamiltonian", "h_grad_E", "h_quantum_E", "h_coupling",
                   "h_density", "h_velocity", "h_quantum_n", "mass_residual_L2",
                   "momentum_residual_L2"});
    for (std::size_t i = 0; i < traj.frames.size(); ++i) {
        const Frame& f = traj.frames[i];
        csv.row_values({f.t, f.mass, f.hamiltonian, f.h_terms[0], f.h_terms[1], f.h_terms[2],
                        f.h_terms[3], f.h_terms[4], f.h_terms[5], fr.mass_l2[i],
                        fr.momentum_l2[i]});
    }
    csv.close();

    const PrimalState& last = traj.frames.back().state;
    write_checkpoint(join_path(m.out_dir, "final.qzk"), g, cfg.eps, last);
    if (cfg.n <= 512) {
        write_checkpoint_json(join_path(m.out_dir, "final.json"), g, cfg.eps, last);
    }

    if (traj.blew_up) {
        std::fprintf(stderr, "runtime divergence: blow-up at t=%.6g\n", traj.blowup_time);
        write_summary(m.out_dir, m, cfg.seed, {});
        return 2;
    }

    const double mass0 = traj.frames.front().mass;
    const double mass1 = traj.frames.back().mass;
    const double ham0 = traj.frames.front().hamiltonian;
    const double ham1 = traj.frames.back().hamiltonian;
    const double mass_scale = std::max(std::abs(mass0), 1e-300);
    const double ham_scale = std::max(std::abs(ham0), 1.0);

    std::vector<Check> checks;
    {
        Check c;
        c.name = "mass_drift_rel";
        c.value = std::abs(mass1 - mass0) / mass_scale;
        c.threshold = conf.get_double("simulate.verify_mass_tol", 1e-8);
        c.pass = c.value <= c.threshold;
        checks.push_back(c);
    }
    {
        Check c;
        c.name = "hamiltonian_drift_rel";
        c.value = std::abs(ham1 - ham0) / ham_scale;
        c.threshold = conf.get_double("simulate.verify_energy_tol", 1e-5);
        c.pass = c.value <= c.threshold;
        checks.push_back(c);
    }
    return finish(m.out_dir, m, cfg.seed, checks);
}

// --- limits ------------------------------------------------------------------

int cmd_limits(const RunManifest& m, const ConfigMap& conf) {
    LimitExperimentConfig cfg;
    cfg.eps_sequence = conf.get_double_list("limits.eps_sequence", {0.5, 0.25, 0.125});
    cfg.n = static_cast<int>(conf.get_int("limits.grid_n", cfg.n));
    cfg.length = conf.get_double("limits.length", cfg.length);
    cfg.dt = conf.get_double("limits.dt", cfg.dt);
    cfg.t_compare = conf.get_double("limits.t_compare", cfg.t_compare);
    cfg.sobolev_orders = conf.get_double_list("limits.sobolev_orders", cfg.sobolev_orders);
    cfg.seed = effective_seed(m, conf, "limits.seed");
    cfg.classical_comparison = conf.get_bool("limits.classical_comparison", true);
    cfg.adiabatic_tracking = conf.get_bool("limits.adiabatic_tracking", true);
    cfg.e0_amplitude = conf.get_double("limits.e0_amplitude", cfg.e0_amplitude);
    cfg.e0_width = conf.get_double("limits.e0_width", cfg.e0_width);
    validate(cfg);

    const bool record_runtime = conf.get_bool("limits.record_runtime", false);
    std::vector<LimitRow> rows = limit_experiment(cfg);

    CsvWriter csv(join_path(m.out_dir, "limits.csv"),
                  {"eps", "norm_name", "value", "runtime_seconds"});
    for (const auto& r : rows) {
        csv.row({format_g17(r.eps), r.norm_name, format_g17(r.value),
                 format_g17(record_runtime ? r.runtime_seconds : 0.0)});
    }
    csv.close();

    std::vector<Check> checks;
    // Classical-limit trend: the L2 distance to the classical solution must
    // shrink strictly along the decreasing eps sequence.
    if (cfg.classical_comparison && cfg.eps_sequence.size() >= 2) {
        std::vector<double> dist;
        for (double eps : cfg.eps_sequence) {
            for (const auto& r : rows) {
                if (r.norm_name == "E_vs_classical_L2" && r.eps == eps) dist.push_back(r.value);
            }
        }
        double worst_ratio = 0.0;
        for (std::size_t i = 0; i + 1 < dist.size(); ++i) {
            if (dist[i] > 0.0) worst_ratio = std::max(worst_ratio, dist[i + 1] / dist[i]);
        }
        Check c;
        c.name = "classical_distance_monotone";
        c.value = worst_ratio;  // max ratio of consecutive distances
        c.threshold = conf.get_double("limits.verify_monotone_ratio", 1.0);
        c.pass = dist.size() == cfg.eps_sequence.size() && worst_ratio < c.threshold;
        checks.push_back(c);
    }
    if (cfg.adiabatic_tracking) {
        double worst = 0.0;
        for (const auto& r : rows) {
            if (r.norm_name == "adiabatic_rel_detachment") worst = std::max(worst, r.value);
        }
        Check c;
        c.name = "adiabatic_detachment_max";
        c.value = worst;
        c.threshold = conf.get_double("limits.verify_detachment_max", 10.0);
        c.pass = worst <= c.threshold;
        checks.push_back(c);
    }
    {
        double worst = 0.0;
        bool finite = true;
        for (const auto& r : rows) {
            if (!std::isfinite(r.value)) finite = false;
            worst = std::max(worst, std::abs(r.value));
        }
        Check c;
        c.name = "values_finite";
        c.value = worst;
        c.threshold = 1e300;
        c.pass = finite;
        checks.push_back(c);
    }
    return finish(m.out_dir, m, cfg.seed, checks);
}

// --- estimates ---------------------------------------------------------------

std::string kernel_tag(KernelKind k) {
    switch (k) {
        case KernelKind::C1: return "c1";
        case KernelKind::C2: return "c2";
        case KernelKind::C3: return "c3";
    }
    return "c1";
}

int cmd_estimates(const RunManifest& m, const ConfigMap& conf) {
    ScanConfig sc;
    std::string which = m.which.empty() ? conf.get_string("estimates.which", "C1") : m.which;
    if (which == "C1" || which == "c1") {
        sc.kind = KernelKind::C1;
    } else if (which == "C2" || which == "c2") {
        sc.kind = KernelKind::C2;
    } else if (which == "C3" || which == "c3") {
        sc.kind = KernelKind::C3;
    } else {
        throw std::invalid_argument("estimates.which: unknown kernel '" + which +
                                    "' (expected C1, C2 or C3)");
    }
    sc.est.theta = conf.get_double("estimates.theta", sc.est.theta);
    sc.est.k = conf.get_double("estimates.k", sc.est.k);
    sc.est.l = conf.get_double("estimates.l", sc.est.l);
    sc.est.eps = conf.get_double("estimates.eps", sc.est.eps);
    sc.n_tau = static_cast<int>(conf.get_int("estimates.n_tau", sc.n_tau));
    sc.n_xi = static_cast<int>(conf.get_int("estimates.n_xi", sc.n_xi));
    sc.tau_abs_min = conf.get_double("estimates.tau_abs_min", sc.tau_abs_min);
    sc.tau_abs_max = conf.get_double("estimates.tau_abs_max", sc.tau_abs_max);
    sc.xi_min = conf.get_double("estimates.xi_min", sc.xi_min);
    sc.xi_max = conf.get_double("estimates.xi_max", sc.xi_max);
    sc.include_case_boundaries = conf.get_bool("estimates.include_case_boundaries", true);
    sc.threads = threads_from_env();

    ScanResult r = kernel_sup_scan(sc);

    const std::string tag = kernel_tag(sc.kind);
    CsvWriter csv(join_path(m.out_dir, "scan_" + tag + ".csv"),
                  {"tau", "xi", "kernel_value", "prefactor", "product"});
    for (const auto& p : r.points) {
        csv.row_values({p.tau, p.xi, p.kernel_value, p.prefactor, p.product});
    }
    csv.close();

    CsvWriter series(join_path(m.out_dir, "scan_" + tag + "_series.csv"), {"xi", "sup_product"});
    for (std::size_t i = 0; i < r.xi_series.size(); ++i) {
        series.row_values({r.xi_series[i], r.sup_per_xi[i]});
    }
    series.close();

    {
        nlohmann::json j;
        j["kernel"] = kernel_name(sc.kind);
        j["supremum"] = r.supremum;
        j["argmax_tau"] = r.argmax_tau;
        j["argmax_xi"] = r.argmax_xi;
        j["slope"] = r.slope;
        j["seconds"] = r.seconds;
        j["warnings"] = r.warnings;
        j["config"] = {{"theta", sc.est.theta},
                       {"k", sc.est.k},
                       {"l", sc.est.l},
                       {"eps", sc.est.eps},
                       {"n_tau", sc.n_tau},
                       {"n_xi", sc.n_xi},
                       {"tau_abs_min", sc.tau_abs_min},
                       {"tau_abs_max", sc.tau_abs_max},
                       {"xi_min", sc.xi_min},
                       {"xi_max", sc.xi_max},
                       {"include_case_boundaries", sc.include_case_boundaries},
                       {"threads", sc.threads}};
        std::ofstream out(join_path(m.out_dir, "scan_" + tag + "_summary.json"),
                          std::ios::binary);
        if (!out) throw std::runtime_error("cannot open scan summary for writing");
        out << j.dump(2) << '\n';
    }

    if (conf.get_bool("estimates.emit_plots", true)) {
        emit_plotdata(m.out_dir, sc.est.eps);
    }

    std::vector<Check> checks;
    {
        Check c;
        c.name = "scan_slope";
        c.value = r.slope;
        c.threshold = conf.get_double("estimates.verify_slope_max", 0.05);
        c.pass = std::isfinite(r.slope) && r.slope <= c.threshold;
        checks.push_back(c);
    }
    {
        Check c;
        c.name = "scan_supremum_finite";
        c.value = r.supremum;
        c.threshold = conf.get_double("estimates.verify_sup_max", 1e300);
        c.pass = std::isfinite(r.supremum) && r.supremum <= c.threshold;
        checks.push_back(c);
    }
    return finish(m.out_dir, m, effective_seed(m, conf, "estimates.seed"), checks);
}

// --- norms -------------------------------------------------------------------

int cmd_norms(const RunManifest& m, const ConfigMap& conf) {
    const int n = static_cast<int>(conf.get_int("norms.grid_n", 128));
    const double length = conf.get_double("norms.length", 32.0 * kPi);
    const double eps = conf.get_double("norms.eps", 1.0);
    const double window_t = conf.get_double("norms.window_t", 0.5);
    const int n_frames = static_cast<int>(conf.get_int("norms.frames", 64));
    const double s = conf.get_double("norms.s", 0.0);
    const double b = conf.get_double("norms.b", 0.55);
    const double dt_target = conf.get_double("norms.dt", 1e-3);
    const std::uint64_t seed = effective_seed(m, conf, "norms.seed");

    if (n < 8 || n % 2 != 0) throw std::invalid_argument("norms.grid_n: must be an even integer >= 8");
    if (!(length > 0.0)) throw std::invalid_argument("norms.length: must be positive");
    if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("norms.eps: must lie in [0, 1]");
    if (!(window_t > 0.0)) throw std::invalid_argument("norms.window_t: must be positive");
    if (n_frames < 8) throw std::invalid_argument("norms.frames: must be >= 8");
    if (!(dt_target > 0.0)) throw std::invalid_argument("norms.dt: must be positive");

    const SpectralGrid g = make_grid(n, length);
    const DispersionSymbols sy = make_symbols(g, eps);

    ProfileSpec e0_default;
    e0_default.kind = ProfileKind::gaussian;
    e0_default.amplitude = 1.0;
    e0_default.width = 2.0;
    const ProfileSpec e0_spec = parse_profile(conf, "norms.e0", e0_default);

    CounterRng rng(seed, 0);
    PrimalState p0;
    p0.E = make_profile(g, e0_spec, false, eps, nullptr, rng);
    p0.n = FourierField(g.n);
    p0.nt = FourierField(g.n);
    SplitState split = split_state(g, sy, p0);

    // March to the M uniform frame times on [0, window_T); whole steps only,
    // dt adjusted so every frame time is hit exactly.
    const double frame_dt = window_t / n_frames;
    const int steps_per_frame = std::max(1, static_cast<int>(std::lround(frame_dt / dt_target)));
    const double dt = frame_dt / steps_per_frame;

    std::vector<FourierField> e_frames, np_frames, nm_frames;
    std::vector<double> frame_times, sob_e, sob_n;
    e_frames.reserve(n_frames);
    np_frames.reserve(n_frames);
    nm_frames.reserve(n_frames);
    for (int f = 0; f < n_frames; ++f) {
        if (f > 0) {
            for (int st = 0; st < steps_per_frame; ++st) split = step_strang(g, sy, split, dt);
        }
        const double t = f * frame_dt;
        frame_times.push_back(t);
        PrimalState p = unsplit_state(g, sy, split);
        sob_e.push_back(sobolev_norm(g, p.E, s));
        sob_n.push_back(sobolev_norm(g, p.n, s));
        // Hann window in time: makes the periodic extension of the windowed
        // trajectory smooth, as the discrete space-time norm assumes.
        const double w = 0.5 * (1.0 - std::cos(2.0 * kPi * f / n_frames));
        FourierField we = split.E, wp = split.n_plus, wm = split.n_minus;
        for (auto& c : we.c) c *= w;
        for (auto& c : wp.c) c *= w;
        for (auto& c : wm.c) c *= w;
        e_frames.push_back(std::move(we));
        np_frames.push_back(std::move(wp));
        nm_frames.push_back(std::move(wm));
    }

    const double xb_e = bourgain_norm(g, sy, e_frames, window_t, s, b, Phase::schrodinger);
    const double xb_np = bourgain_norm(g, sy, np_frames, window_t, s, b, Phase::wave_plus);
    const double xb_nm = bourgain_norm(g, sy, nm_frames, window_t, s, b, Phase::wave_minus);

    CsvWriter csv(join_path(m.out_dir, "norms.csv"), {"name", "s", "b", "t", "value"});
    for (int f = 0; f < n_frames; ++f) {
        csv.row({"sobolev_E", format_g17(s), format_g17(0.0), format_g17(frame_times[f]),
                 format_g17(sob_e[f])});
    }
    for (int f = 0; f < n_frames; ++f) {
        csv.row({"sobolev_n", format_g17(s), format_g17(0.0), format_g17(frame_times[f]),
                 format_g17(sob_n[f])});
    }
    csv.row({"bourgain_E", format_g17(s), format_g17(b), format_g17(window_t), format_g17(xb_e)});
    csv.row({"bourgain_n_plus", format_g17(s), format_g17(b), format_g17(window_t),
             format_g17(xb_np)});
    csv.row({"bourgain_n_minus", format_g17(s), format_g17(b), format_g17(window_t),
             format_g17(xb_nm)});
    csv.close();

    double worst = 0.0;
    bool finite = true;
    for (double v : {xb_e, xb_np, xb_nm}) {
        if (!std::isfinite(v)) finite = false;
        worst = std::max(worst, std::abs(v));
    }
    for (double v : sob_e) {
        if (!std::isfinite(v)) finite = false;
    }
    for (double v : sob_n) {
        if (!std::isfinite(v)) finite = false;
    }
    Check c;
    c.name = "norms_finite";
    c.value = worst;
    c.threshold = conf.get_double("norms.verify_max", 1e300);
    c.pass = finite && worst <= c.threshold;
    return finish(m.out_dir, m, seed, {c});
}

}  // namespace

std::string qzak_version() { return kVersion; }

void emit_plotdata(const std::string& out_dir, double eps) {
    {
        CsvWriter csv(join_path(out_dir, "region_boundary.csv"), {"k", "l"});
        for (const auto& [k, l] : region_boundary_polyline(3.0)) {
            csv.row_values({k, l});
        }
        csv.close();
    }
    {
        const double xi = 64.0;
        const double gamma = phi_eps(xi, eps);
        const double sp = std::sqrt(gamma);
        struct Case {
            const char* name;
            double tau;
        };
        // The three modulation regimes of the mixed phase: small |tau|,
        // tau below -2*Gamma, and tau in the order-one window near -sqrt(Phi).
        const Case cases[] = {{"small_tau", 0.0},
                              {"below_minus_two_gamma", -2.0 * gamma},
                              {"order_one_window", -0.75 * sp}};
        CsvWriter csv(join_path(out_dir, "f_profile.csv"), {"case", "tau", "xi1", "f_value"});
        for (const auto& cs : cases) {
            for (const auto& p : phase_profile(cs.tau, xi, eps, PhaseBranch::wave_plus, 3.0 * xi,
                                               481)) {
                csv.row({cs.name, format_g17(cs.tau), format_g17(p.xi1), format_g17(p.f_value)});
            }
        }
        csv.close();
    }
}

int run_manifest(const RunManifest& m) {
    try {
        if (m.command != "simulate" && m.command != "limits" && m.command != "estimates" &&
            m.command != "norms") {
            throw std::invalid_argument("command: unknown command '" + m.command +
                                        "' (expected simulate, limits, estimates or norms)");
        }
        if (m.out_dir.empty()) throw std::invalid_argument("out: output directory required");
        std::error_code ec;
        std::filesystem::create_directories(m.out_dir, ec);
        if (ec) {
            throw std::invalid_argument("out: cannot create directory '" + m.out_dir +
                                        "': " + ec.message());
        }
        const ConfigMap conf = m.config_path.empty() ? ConfigMap::parse_string("")
                                                     : ConfigMap::parse_file(m.config_path);
        if (m.command == "simulate") return cmd_simulate(m, conf);
        if (m.command == "limits") return cmd_limits(m, conf);
        if (m.command == "estimates") return cmd_estimates(m, conf);
        return cmd_norms(m, conf);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    } catch (const BlowupError& e) {
        std::fprintf(stderr, "runtime divergence: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "runtime error: %s\n", e.what());
        return 2;
    }
}

}  // namespace qzak
