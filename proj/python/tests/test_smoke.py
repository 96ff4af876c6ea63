import math

import numpy as np
import pytest

qzak = pytest.importorskip("qzak")


def test_version_string():
    assert isinstance(qzak.__version__, str) and qzak.__version__


def test_grid_and_transform_roundtrip():
    g = qzak.make_grid(64, 2 * math.pi)
    assert g.n == 64
    assert g.dealias_keep == 21
    x = np.array([g.node(m) for m in range(g.n)])
    f = qzak.field_from_physical(g, np.exp(1j * x))
    coeffs = np.asarray(f)
    assert coeffs.shape == (64,)
    assert abs(coeffs[g.mode_index(1)] - 1.0) < 1e-13
    back = qzak.to_physical(g, f)
    assert np.max(np.abs(back - np.exp(1j * x))) < 1e-12


def test_sobolev_norm_oracle():
    g = qzak.make_grid(64, 2 * math.pi)
    x = np.array([g.node(m) for m in range(g.n)])
    f = qzak.field_from_physical(g, np.sin(x).astype(complex))
    assert qzak.sobolev_norm(g, f, 0.0) == pytest.approx(math.sqrt(math.pi), abs=1e-12)


def test_split_roundtrip_and_mass():
    g = qzak.make_grid(128, 2 * math.pi)
    sy = qzak.make_symbols(g, 1.0)
    rng = qzak.CounterRng(5, 0)
    p = qzak.PrimalState()
    p.E = qzak.random_sobolev_data(g, 1.0, 1.0, False, rng)
    p.n = qzak.random_sobolev_data(g, 1.0, 1.0, True, rng)
    p.nt = qzak.random_sobolev_data(g, 1.0, 1.0, True, rng)
    q = qzak.unsplit_state(g, sy, qzak.split_state(g, sy, p))
    assert qzak.l2_distance(g, p.E, q.E) < 1e-12
    assert qzak.l2_distance(g, p.n, q.n) < 1e-12
    assert qzak.l2_distance(g, p.nt, q.nt) < 1e-12

    plane = qzak.PrimalState()
    plane.E = qzak.plane_wave(g, 3)
    plane.n = np.zeros(g.n, dtype=complex)
    plane.nt = np.zeros(g.n, dtype=complex)
    assert qzak.mass(g, plane) == pytest.approx(g.length, rel=1e-12)


def test_simulate_short_run_conserves_mass():
    cfg = qzak.SimConfig()
    cfg.n = 64
    cfg.t_final = 0.05
    cfg.record_stride = 10
    cfg.e0.kind = qzak.ProfileKind.gaussian
    cfg.e0.amplitude = 1.0
    cfg.e0.width = 2.0
    traj = qzak.simulate(cfg)
    assert not traj.blew_up
    assert len(traj.frames) >= 3
    masses = [f.mass for f in traj.frames]
    assert max(abs(m - masses[0]) for m in masses) < 1e-12 * masses[0]
    f0 = traj.frames[0]
    assert f0.hamiltonian == pytest.approx(sum(f0.h_terms), rel=1e-12)


def test_adiabatic_density_limit():
    g = qzak.make_grid(128, 32 * math.pi)
    e = qzak.gaussian_profile(g, 1.0, 2.0, 16 * math.pi)
    n0 = np.asarray(qzak.adiabatic_density(g, e, 0.0))
    esq = np.asarray(qzak.dealiased_modulus_squared(g, e))
    assert np.max(np.abs(n0 + esq)) < 1e-14


def test_estimate_lab_entry_points():
    t = qzak.weighted_tau_integral(0.3, 0.3, 0.0, 0.0)
    assert t.value == pytest.approx(10.0, abs=1e-6)
    assert t.converged

    e = qzak.eta_integral_bound(0.0, 4.0, 1.0, 0.45)
    assert e.ratio > 0 and math.isfinite(e.ratio)

    assert qzak.region_membership(0.0, 0.0).inside
    assert not qzak.region_membership(2.0, 0.0).inside

    geo = qzak.stationary_points(0.0, 64.0, 1.0, qzak.PhaseBranch.wave_plus)
    assert geo.convex_certified
    assert 0.5 < geo.a_m / 64.0 ** (1.0 / 3.0) < 1.0


def test_kernel_scan_tiny():
    cfg = qzak.ScanConfig()
    cfg.n_tau = 3
    cfg.n_xi = 3
    cfg.tau_abs_max = 10.0
    cfg.xi_max = 10.0
    cfg.include_case_boundaries = False
    res = qzak.kernel_sup_scan(cfg)
    assert math.isfinite(res.supremum) and res.supremum > 0
    # each xi row samples 2*n_tau + 1 tau values (the endpoint is kept)
    assert len(res.points) == cfg.n_xi * (2 * cfg.n_tau + 1)
    assert not res.warnings
