#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "qzak/conservation.hpp"
#include "qzak/dynamics.hpp"
#include "qzak/grid.hpp"
#include "qzak/rng.hpp"

using namespace qzak;
using std::numbers::pi;

namespace {
const cplx I(0.0, 1.0);

PrimalState zero_state(const SpectralGrid& g) {
    PrimalState p;
    p.E = FourierField(g.n);
    p.n = FourierField(g.n);
    p.nt = FourierField(g.n);
    return p;
}
}  // namespace

TEST_CASE("mass is the L2 integral of the envelope") {
    SpectralGrid g = make_grid(64, 2.0 * pi);
    PrimalState p = zero_state(g);
    p.E = field_from_function(g, [](double x) { return std::exp(I * x); });
    CHECK(mass(g, p) == doctest::Approx(2.0 * pi).epsilon(1e-13));
    // discrete Parseval: coefficient sum equals the collocation sum
    p.E = gaussian_profile(g, 1.3, 0.7, pi);
    auto phys = to_physical(g, p.E);
    double direct = 0.0;
    for (const auto& v : phys) direct += std::norm(v) * g.dx();
    CHECK(mass(g, p) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("energy of a single free envelope mode is 4 pi") {
    SpectralGrid g = make_grid(64, 2.0 * pi);
    DispersionSymbols sy = make_symbols(g, 1.0);
    PrimalState p = zero_state(g);
    p.E = field_from_function(g, [](double x) { return std::exp(I * x); });
    ConservationReport r = conservation_report(g, sy, p);
    // |E_x|^2 and eps^2 |E_xx|^2 each integrate to 2 pi; all density terms vanish
    CHECK(r.hamiltonian == doctest::Approx(4.0 * pi).epsilon(1e-12));
    CHECK(r.h_terms[0] == doctest::Approx(2.0 * pi).epsilon(1e-12));
    CHECK(r.h_terms[1] == doctest::Approx(2.0 * pi).epsilon(1e-12));
    for (int k = 2; k < 6; ++k) CHECK(std::fabs(r.h_terms[k]) < 1e-13);
    CHECK(r.mass == doctest::Approx(2.0 * pi).epsilon(1e-13));
}

TEST_CASE("energy of a static density profile splits between n^2 and gradient terms") {
    SpectralGrid g = make_grid(64, 2.0 * pi);
    DispersionSymbols sy = make_symbols(g, 1.0);
    PrimalState p = zero_state(g);
    p.n = field_from_function(g, [](double x) { return cplx(std::cos(x), 0.0); });
    ConservationReport r = conservation_report(g, sy, p);
    // n^2/2 integrates to pi/2, (eps^2/2)|n_x|^2 to pi/2
    CHECK(r.h_terms[3] == doctest::Approx(0.5 * pi).epsilon(1e-12));
    CHECK(r.h_terms[5] == doctest::Approx(0.5 * pi).epsilon(1e-12));
    CHECK(r.hamiltonian == doctest::Approx(pi).epsilon(1e-12));
}

TEST_CASE("the velocity term integrates the antiderivative of the density rate") {
    SpectralGrid g = make_grid(64, 2.0 * pi);
    DispersionSymbols sy = make_symbols(g, 1.0);
    PrimalState p = zero_state(g);
    p.nt = field_from_function(g, [](double x) { return cplx(std::sqrt(2.0) * std::sin(x), 0.0); });
    ConservationReport r = conservation_report(g, sy, p);
    // V = -Dx^{-1} nt = sqrt(2) cos x, so |V|^2/2 integrates to pi
    CHECK(r.h_terms[4] == doctest::Approx(pi).epsilon(1e-12));
    CHECK(r.hamiltonian == doctest::Approx(pi).epsilon(1e-12));
}

TEST_CASE("the energy always equals the sum of its six recorded terms") {
    SpectralGrid g = make_grid(128, 32.0 * pi);
    DispersionSymbols sy = make_symbols(g, 0.5);
    CounterRng rng(3, 1);
    PrimalState p;
    p.E = random_sobolev_data(g, 2.0, 1.0, false, rng);
    p.n = random_sobolev_data(g, 2.0, 0.6, true, rng);
    p.nt = random_sobolev_data(g, 1.5, 0.4, true, rng);
    ConservationReport r = conservation_report(g, sy, p);
    double sum = 0.0;
    for (double h : r.h_terms) sum += h;
    CHECK(r.hamiltonian == doctest::Approx(sum).epsilon(1e-13));
    CHECK(std::isfinite(r.momentum));
}

TEST_CASE("plane-wave momentum densities take their closed-form constant values") {
    SpectralGrid g = make_grid(64, 2.0 * pi);
    DispersionSymbols sy = make_symbols(g, 1.0);
    const double kappa = 3.0;
    PrimalState p = zero_state(g);
    p.E = field_from_function(g, [kappa](double x) { return std::exp(I * kappa * x); });
    MomentumDensities md = momentum_densities(g, sy, p);
    // rho = |E|^2 = 1, J = 2 Im(conj(E) E_x) = 2 kappa,
    // J_Q = i(E d3Ebar - dE d2Ebar + d2E dEbar - d3E Ebar) = -4 kappa^3
    CHECK(std::abs(md.rho.c[0] - 1.0) < 1e-12);
    CHECK(std::abs(md.j.c[0] - 2.0 * kappa) < 1e-11);
    CHECK(std::abs(md.j_q.c[0] - (-4.0 * kappa * kappa * kappa)) < 1e-9);
    for (int j = 1; j < g.n; ++j) {
        CHECK(std::abs(md.rho.c[j]) < 1e-12);
        CHECK(std::abs(md.j.c[j]) < 1e-11);
        CHECK(std::abs(md.j_q.c[j]) < 1e-9);
    }
    ConservationReport r = conservation_report(g, sy, p);
    CHECK(r.momentum == doctest::Approx(2.0 * kappa * 2.0 * pi).epsilon(1e-12));
}

TEST_CASE("a real envelope carries no current") {
    SpectralGrid g = make_grid(64, 2.0 * pi);
    DispersionSymbols sy = make_symbols(g, 1.0);
    PrimalState p = zero_state(g);
    p.E = field_from_function(g, [](double x) { return cplx(std::cos(x), 0.0); });
    MomentumDensities md = momentum_densities(g, sy, p);
    for (int j = 0; j < g.n; ++j) CHECK(std::abs(md.j.c[j]) < 1e-13);
}

TEST_CASE("energy drift of a short nonlinear run stays at the splitting-error scale") {
    SimConfig cfg;
    cfg.n = 128;
    cfg.dt = 1e-3;
    cfg.t_final = 0.2;
    cfg.record_stride = 20;
    cfg.e0.kind = ProfileKind::gaussian;
    cfg.e0.amplitude = 1.0;
    cfg.e0.width = 2.0;
    cfg.n0.kind = ProfileKind::cosine;
    cfg.n0.amplitude = 0.3;
    cfg.n0.wavenumber = 2;
    Trajectory traj = simulate(cfg);
    REQUIRE(traj.frames.size() >= 2);
    const double h0 = traj.frames.front().hamiltonian;
    const double hT = traj.frames.back().hamiltonian;
    CHECK(std::fabs(hT - h0) / std::max(std::fabs(h0), 1.0) < 1e-7);
    const double m0 = traj.frames.front().mass;
    const double mT = traj.frames.back().mass;
    CHECK(std::fabs(mT - m0) / m0 < 1e-12);
}

TEST_CASE("local-law residuals shrink like the square of the frame spacing") {
    auto residual_at = [](double dt) {
        SimConfig cfg;
        cfg.n = 128;
        cfg.dt = dt;
        cfg.t_final = 0.1;
        cfg.record_stride = 10;  // fixed stride: frame spacing is proportional to dt
        cfg.e0.kind = ProfileKind::gaussian;
        cfg.e0.amplitude = 1.0;
        cfg.e0.width = 2.0;
        cfg.n0.kind = ProfileKind::cosine;
        cfg.n0.amplitude = 0.3;
        cfg.n0.wavenumber = 2;
        Trajectory traj = simulate(cfg);
        SpectralGrid g = make_grid(cfg.n, cfg.length);
        DispersionSymbols sy = make_symbols(g, cfg.eps);
        return local_conservation_residual(g, sy, traj);
    };
    ResidualReport coarse = residual_at(1e-3);
    ResidualReport fine = residual_at(5e-4);
    CHECK(coarse.mass_l2 / fine.mass_l2 > 3.0);
    CHECK(coarse.mass_l2 / fine.mass_l2 < 5.0);
    CHECK(coarse.momentum_l2 / fine.momentum_l2 > 2.5);
    CHECK(coarse.momentum_l2 / fine.momentum_l2 < 6.0);
    CHECK(coarse.mass_sup > 0.0);
}

TEST_CASE("per-frame residual series has one entry per stored frame") {
    SimConfig cfg;
    cfg.n = 64;
    cfg.dt = 1e-3;
    cfg.t_final = 0.05;
    cfg.record_stride = 10;
    Trajectory traj = simulate(cfg);
    SpectralGrid g = make_grid(cfg.n, cfg.length);
    DispersionSymbols sy = make_symbols(g, cfg.eps);
    FrameResiduals fr = frame_residuals(g, sy, traj);
    CHECK(fr.mass_l2.size() == traj.frames.size());
    CHECK(fr.momentum_l2.size() == traj.frames.size());
    for (double v : fr.mass_l2) CHECK(std::isfinite(v));
    for (double v : fr.momentum_l2) CHECK(std::isfinite(v));
}
