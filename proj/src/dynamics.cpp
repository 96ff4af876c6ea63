#include "qzak/dynamics.hpp"

#include <cmath>
#include <numbers>

#include "qzak/conservation.hpp"
#include "qzak/limits.hpp"

namespace qzak {

namespace {

void check_finite(const SplitState& s, const char* where) {
    auto ok = [](const FourierField& f) {
        for (const auto& z : f.c)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    };
    if (!ok(s.E) || !ok(s.n_plus) || !ok(s.n_minus))
        throw BlowupError(s.t, std::string(where) + ": non-finite field values (blow-up) at t=" +
                                   std::to_string(s.t));
}

} // namespace

SplitState free_evolve(const SpectralGrid& g, const DispersionSymbols& sy, const SplitState& s,
                       double t) {
    SplitState out = s;
    out.t = s.t + t;
    for (int j = 0; j < g.n; ++j) {
        const double wphase = t * sy.sqrt_phi[j];
        out.E.c[j] *= std::polar(1.0, -t * sy.phi[j]);
        out.n_plus.c[j] *= std::polar(1.0, -wphase);
        out.n_minus.c[j] *= std::polar(1.0, wphase);
    }
    return out;
}

SplitTendency nonlinear_rhs(const SpectralGrid& g, const DispersionSymbols& sy,
                            const SplitState& s) {
    SplitTendency td;
    FourierField nbar(g.n);
    for (int j = 0; j < g.n; ++j) nbar.c[j] = 0.5 * (s.n_plus.c[j] + s.n_minus.c[j]);
    td.dE = dealiased_product(g, nbar, s.E);
    const cplx i1(0.0, 1.0);
    for (auto& z : td.dE.c) z *= -i1;

    const FourierField esq = dealiased_modulus_squared(g, s.E);
    const FourierField w = apply_symbol(g, sy, Symbol::lambda_inv_delta, esq);
    td.dn_plus = FourierField(g.n);
    td.dn_minus = FourierField(g.n);
    for (int j = 0; j < g.n; ++j) {
        td.dn_plus.c[j] = i1 * w.c[j];
        td.dn_minus.c[j] = -i1 * w.c[j];
    }
    return td;
}

SplitState step_strang(const SpectralGrid& g, const DispersionSymbols& sy, const SplitState& s,
                       double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("step_strang: dt must be positive");
    SplitState cur = free_evolve(g, sy, s, 0.5 * dt);

    // Nonlinear substep (exact; see header).
    FourierField nbar(g.n);
    for (int j = 0; j < g.n; ++j) nbar.c[j] = 0.5 * (cur.n_plus.c[j] + cur.n_minus.c[j]);
    apply_dealias(g, nbar);
    const std::vector<cplx> nbar_phys = to_physical(g, nbar);

    const FourierField esq = dealiased_modulus_squared(g, cur.E);
    const FourierField w = apply_symbol(g, sy, Symbol::lambda_inv_delta, esq);

    // E itself is not truncated here: the phase has unit modulus at every node,
    // so leaving the full spectrum intact keeps |E(x)| -- and hence the mass --
    // exactly invariant under this substep.
    std::vector<cplx> e_phys = to_physical(g, cur.E);
    const cplx mi(0.0, -1.0);
    for (int m = 0; m < g.n; ++m) e_phys[m] *= std::exp(mi * dt * nbar_phys[m]);
    cur.E = field_from_physical(g, e_phys);

    const cplx i1(0.0, 1.0);
    for (int j = 0; j < g.n; ++j) {
        cur.n_plus.c[j] += i1 * dt * w.c[j];
        cur.n_minus.c[j] -= i1 * dt * w.c[j];
    }

    cur = free_evolve(g, sy, cur, 0.5 * dt);
    check_finite(cur, "step_strang");
    return cur;
}

namespace {

SplitTendency propagate_tendency(const SpectralGrid& g, const DispersionSymbols& sy,
                                 const SplitTendency& td, double t) {
    SplitTendency out = td;
    for (int j = 0; j < g.n; ++j) {
        const double wphase = t * sy.sqrt_phi[j];
        out.dE.c[j] *= std::polar(1.0, -t * sy.phi[j]);
        out.dn_plus.c[j] *= std::polar(1.0, -wphase);
        out.dn_minus.c[j] *= std::polar(1.0, wphase);
    }
    return out;
}

double state_l2_distance(const SpectralGrid& g, const SplitState& a, const SplitState& b) {
    const double de = l2_distance(g, a.E, b.E);
    const double dp = l2_distance(g, a.n_plus, b.n_plus);
    const double dm = l2_distance(g, a.n_minus, b.n_minus);
    return std::sqrt(de * de + dp * dp + dm * dm);
}

} // namespace

PicardResult picard_iterate(const SpectralGrid& g, const DispersionSymbols& sy, const SplitState& s0,
                            double t_final, int n_time_nodes, int n_iters) {
    if (!(t_final > 0.0)) throw std::invalid_argument("picard_iterate: t_final must be positive");
    if (n_time_nodes < 2) throw std::invalid_argument("picard_iterate: need at least 2 time nodes");
    if (n_iters < 2) throw std::invalid_argument("picard_iterate: need at least 2 iterations");

    PicardResult res;
    const int m = n_time_nodes;
    const double h = t_final / (m - 1);
    res.times.resize(m);
    for (int i = 0; i < m; ++i) res.times[i] = i * h;

    // Iterate 0: free flight.
    std::vector<SplitState> free_flight(m);
    for (int i = 0; i < m; ++i) free_flight[i] = free_evolve(g, sy, s0, res.times[i]);
    res.iterates.push_back(free_flight);

    int worsening_streak = 0;
    for (int k = 1; k <= n_iters; ++k) {
        const std::vector<SplitState>& prev = res.iterates.back();
        std::vector<SplitTendency> tend(m);
        for (int i = 0; i < m; ++i) tend[i] = nonlinear_rhs(g, sy, prev[i]);

        std::vector<SplitState> next(m);
        next[0] = free_flight[0];
        for (int i = 1; i < m; ++i) {
            SplitState acc = free_flight[i];
            for (int jn = 0; jn <= i; ++jn) {
                const double wq = (jn == 0 || jn == i) ? 0.5 * h : h;
                const SplitTendency prop =
                    propagate_tendency(g, sy, tend[jn], res.times[i] - res.times[jn]);
                for (int c = 0; c < g.n; ++c) {
                    acc.E.c[c] += wq * prop.dE.c[c];
                    acc.n_plus.c[c] += wq * prop.dn_plus.c[c];
                    acc.n_minus.c[c] += wq * prop.dn_minus.c[c];
                }
            }
            next[i] = acc;
        }
        double resid = 0.0;
        for (int i = 0; i < m; ++i) resid = std::max(resid, state_l2_distance(g, next[i], prev[i]));
        if (!res.residuals.empty() && resid > res.residuals.back()) {
            if (++worsening_streak >= 3) res.diverged = true;
        } else {
            worsening_streak = 0;
        }
        res.residuals.push_back(resid);
        res.iterates.push_back(std::move(next));
    }
    return res;
}

FourierField make_profile(const SpectralGrid& g, const ProfileSpec& spec, bool for_density,
                          double eps, const FourierField* e_field, CounterRng& rng) {
    const double center = spec.center < 0.0 ? 0.5 * g.length : spec.center;
    FourierField f;
    switch (spec.kind) {
        case ProfileKind::zero:
            f = FourierField(g.n);
            break;
        case ProfileKind::gaussian:
            f = gaussian_profile(g, spec.amplitude, spec.width, center);
            break;
        case ProfileKind::soliton:
            f = sech_profile(g, spec.amplitude, spec.width, center);
            break;
        case ProfileKind::plane_wave:
            f = plane_wave(g, spec.wavenumber);
            break;
        case ProfileKind::cosine:
            f = cosine_profile(g, spec.amplitude, spec.wavenumber);
            break;
        case ProfileKind::random_sobolev:
            f = random_sobolev_data(g, spec.exponent, spec.amplitude, for_density, rng);
            break;
        case ProfileKind::adiabatic:
            if (e_field == nullptr)
                throw std::invalid_argument("make_profile: adiabatic profile needs the E field");
            f = adiabatic_density(g, *e_field, eps);
            break;
    }
    if (for_density) make_conjugate_symmetric(g, f);
    return f;
}

PrimalState make_initial_state(const SpectralGrid& g, const DispersionSymbols& sy,
                               const SimConfig& cfg) {
    CounterRng rng_e(cfg.seed, 1), rng_n(cfg.seed, 2), rng_nt(cfg.seed, 3);
    PrimalState p;
    p.t = 0.0;
    p.E = make_profile(g, cfg.e0, false, cfg.eps, nullptr, rng_e);
    p.n = make_profile(g, cfg.n0, true, cfg.eps, &p.E, rng_n);
    p.nt = make_profile(g, cfg.nt0, true, cfg.eps, &p.E, rng_nt);
    double scale = 0.0;
    for (const auto& z : p.nt.c) scale = std::max(scale, std::abs(z));
    if (std::abs(p.nt.c[0]) > 1e-12 * std::max(scale, 1e-300))
        throw std::invalid_argument("simulate.nt0: initial nt must have zero mean");
    return p;
}

void validate(const SimConfig& cfg) {
    if (cfg.n < 8 || cfg.n % 2 != 0)
        throw std::invalid_argument("simulate.grid_n: must be an even integer >= 8");
    if (!(cfg.length > 0.0)) throw std::invalid_argument("simulate.length: must be positive");
    if (cfg.eps < 0.0 || cfg.eps > 1.0)
        throw std::invalid_argument("simulate.eps: must lie in [0, 1]");
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("simulate.dt: must be positive");
    if (!(cfg.t_final >= cfg.dt))
        throw std::invalid_argument("simulate.t_final: must be at least dt");
    if (cfg.record_stride < 1)
        throw std::invalid_argument("simulate.record_stride: must be >= 1");
    if (cfg.picard_nodes < 2)
        throw std::invalid_argument("simulate.picard_nodes: must be >= 2");
    if (cfg.picard_iters < 2)
        throw std::invalid_argument("simulate.picard_iters: must be >= 2");
}

Trajectory simulate(const SimConfig& cfg) {
    validate(cfg);
    const SpectralGrid g = make_grid(cfg.n, cfg.length);
    const DispersionSymbols sy = make_symbols(g, cfg.eps);

    Trajectory traj;
    SplitState s = split_state(g, sy, make_initial_state(g, sy, cfg));

    auto record = [&](const SplitState& st) {
        Frame fr;
        fr.state = unsplit_state(g, sy, st);
        fr.t = st.t;
        const ConservationReport rep = conservation_report(g, sy, fr.state);
        fr.mass = rep.mass;
        fr.hamiltonian = rep.hamiltonian;
        for (int i = 0; i < 6; ++i) fr.h_terms[i] = rep.h_terms[i];
        traj.frames.push_back(std::move(fr));
    };

    const long n_steps = std::lround(cfg.t_final / cfg.dt);
    record(s);
    for (long step = 1; step <= n_steps; ++step) {
        try {
            if (cfg.integrator == Integrator::strang) {
                s = step_strang(g, sy, s, cfg.dt);
            } else {
                PicardResult pr =
                    picard_iterate(g, sy, s, cfg.dt, cfg.picard_nodes, cfg.picard_iters);
                SplitState endpoint = pr.iterates.back().back();
                endpoint.t = s.t + cfg.dt;
                s = std::move(endpoint);
                check_finite(s, "simulate(picard)");
            }
        } catch (const BlowupError& e) {
            traj.blew_up = true;
            traj.blowup_time = e.t;
            return traj;
        }
        if (step % cfg.record_stride == 0 || step == n_steps) record(s);
    }
    return traj;
}

} // namespace qzak
