#include "qzak/conservation.hpp"

#include <cmath>
#include <stdexcept>

namespace qzak {

namespace {

double spectral_integral(const SpectralGrid& g, const FourierField& f) {
    // integral over [0,L) of f = L * c_0
    return g.length * f.c[0].real();
}

double l2sq(const SpectralGrid& g, const FourierField& f) {
    double acc = 0.0;
    for (const auto& z : f.c) acc += std::norm(z);
    return g.length * acc;
}

// F(conj(a) * b), alias-free in the retained band.
FourierField dealiased_conj_product(const SpectralGrid& g, FourierField a, FourierField b) {
    apply_dealias(g, a);
    apply_dealias(g, b);
    auto pa = to_physical(g, a);
    auto pb = to_physical(g, b);
    for (int m = 0; m < g.n; ++m) pa[m] = std::conj(pa[m]) * pb[m];
    FourierField out = field_from_physical(g, pa);
    apply_dealias(g, out);
    return out;
}

FourierField real_part_field(const SpectralGrid& g, const FourierField& f) {
    // (f + conj(f))/2 in physical space == enforce conjugate symmetry in coefficients
    FourierField out = f;
    make_conjugate_symmetric(g, out);
    return out;
}

FourierField imag_part_field(const SpectralGrid& g, const FourierField& f) {
    FourierField out(f.size());
    const cplx i1(0.0, 1.0);
    for (int j = 0; j < f.size(); ++j) out.c[j] = f.c[j] / i1;  // coefficients of -i*f
    make_conjugate_symmetric(g, out);
    return out;
}

FourierField dx_pow(const SpectralGrid& g, const DispersionSymbols& sy, const FourierField& f,
                    int order) {
    FourierField out = f;
    for (int i = 0; i < order; ++i) out = apply_symbol(g, sy, Symbol::dx, out);
    return out;
}

void axpy(FourierField& y, double a, const FourierField& x) {
    for (int j = 0; j < y.size(); ++j) y.c[j] += a * x.c[j];
}

} // namespace

double mass(const SpectralGrid& g, const PrimalState& p) {
    return l2sq(g, p.E);
}

ConservationReport conservation_report(const SpectralGrid& g, const DispersionSymbols& sy,
                                       const PrimalState& p) {
    ConservationReport r;
    r.mass = mass(g, p);

    const FourierField ex = apply_symbol(g, sy, Symbol::dx, p.E);
    const FourierField exx = apply_symbol(g, sy, Symbol::dx, ex);
    const FourierField nx = apply_symbol(g, sy, Symbol::dx, p.n);
    const FourierField v_neg = apply_symbol(g, sy, Symbol::dx_inv, p.nt);  // -V
    const double e2 = sy.eps * sy.eps;

    const FourierField esq = dealiased_modulus_squared(g, p.E);
    const FourierField n_esq = dealiased_product(g, p.n, esq);

    r.h_terms[0] = l2sq(g, ex);
    r.h_terms[1] = e2 * l2sq(g, exx);
    r.h_terms[2] = spectral_integral(g, n_esq);
    r.h_terms[3] = 0.5 * l2sq(g, p.n);
    r.h_terms[4] = 0.5 * l2sq(g, v_neg);
    r.h_terms[5] = 0.5 * e2 * l2sq(g, nx);
    r.hamiltonian = 0.0;
    for (double h : r.h_terms) r.hamiltonian += h;

    const FourierField jf = momentum_densities(g, sy, p).j;
    r.momentum = spectral_integral(g, jf);
    return r;
}

MomentumDensities momentum_densities(const SpectralGrid& g, const DispersionSymbols& sy,
                                     const PrimalState& p) {
    MomentumDensities md;
    md.rho = dealiased_modulus_squared(g, p.E);

    const FourierField ex = apply_symbol(g, sy, Symbol::dx, p.E);
    const FourierField exx = apply_symbol(g, sy, Symbol::dx, ex);
    const FourierField exxx = apply_symbol(g, sy, Symbol::dx, exx);

    // J = 2 Im(conj(E) E_x)
    {
        FourierField t = dealiased_conj_product(g, p.E, ex);
        md.j = imag_part_field(g, t);
        for (auto& z : md.j.c) z *= 2.0;
    }
    // J_Q = 2 Im(conj(E) E_xxx) - 2 Im(conj(E_x) E_xx)
    {
        FourierField t1 = dealiased_conj_product(g, p.E, exxx);
        FourierField t2 = dealiased_conj_product(g, ex, exx);
        FourierField i1 = imag_part_field(g, t1);
        FourierField i2 = imag_part_field(g, t2);
        md.j_q = FourierField(g.n);
        axpy(md.j_q, 2.0, i1);
        axpy(md.j_q, -2.0, i2);
    }
    return md;
}

namespace {

// Spatial pieces of the two local laws at a single time, so that
//   mass law:      d/dt rho + MassFlux' = 0   with MassFlux' = d/dx(J - eps^2 J_Q)
//   momentum law:  d/dt J   + MomSpatial = 0
// with MomSpatial = -d/dx(Fc - eps^2 Fq) + 2 n_x |E|^2,
//   Fc = 2 Re(conj(E) E_xx) - 2|E_x|^2,
//   Fq = 2 Re(conj(E) E_xxxx) - 4 Re(conj(E_x) E_xxx) + 2|E_xx|^2.
struct LawSpatial {
    FourierField mass_flux_div;
    FourierField mom_spatial;
};

LawSpatial law_spatial(const SpectralGrid& g, const DispersionSymbols& sy, const PrimalState& p) {
    LawSpatial out;
    const double e2 = sy.eps * sy.eps;
    const MomentumDensities md = momentum_densities(g, sy, p);

    FourierField flux(g.n);
    axpy(flux, 1.0, md.j);
    axpy(flux, -e2, md.j_q);
    out.mass_flux_div = apply_symbol(g, sy, Symbol::dx, flux);

    const FourierField ex = apply_symbol(g, sy, Symbol::dx, p.E);
    const FourierField exx = apply_symbol(g, sy, Symbol::dx, ex);
    const FourierField exxx = apply_symbol(g, sy, Symbol::dx, exx);
    const FourierField exxxx = apply_symbol(g, sy, Symbol::dx, exxx);

    FourierField fc(g.n);
    {
        FourierField re_e_exx = real_part_field(g, dealiased_conj_product(g, p.E, exx));
        FourierField ex_sq = real_part_field(g, dealiased_conj_product(g, ex, ex));
        axpy(fc, 2.0, re_e_exx);
        axpy(fc, -2.0, ex_sq);
    }
    FourierField fq(g.n);
    {
        FourierField re_e_e4 = real_part_field(g, dealiased_conj_product(g, p.E, exxxx));
        FourierField re_ex_e3 = real_part_field(g, dealiased_conj_product(g, ex, exxx));
        FourierField exx_sq = real_part_field(g, dealiased_conj_product(g, exx, exx));
        axpy(fq, 2.0, re_e_e4);
        axpy(fq, -4.0, re_ex_e3);
        axpy(fq, 2.0, exx_sq);
    }
    FourierField total_flux(g.n);
    axpy(total_flux, 1.0, fc);
    axpy(total_flux, -e2, fq);

    const FourierField nx = apply_symbol(g, sy, Symbol::dx, p.n);
    const FourierField esq = dealiased_modulus_squared(g, p.E);
    const FourierField nx_esq = dealiased_product(g, nx, esq);

    out.mom_spatial = apply_symbol(g, sy, Symbol::dx, total_flux);
    for (auto& z : out.mom_spatial.c) z = -z;
    axpy(out.mom_spatial, 2.0, nx_esq);
    return out;
}

double sup_physical(const SpectralGrid& g, const FourierField& f) {
    auto p = to_physical(g, f);
    double m = 0.0;
    for (const auto& z : p) m = std::max(m, std::abs(z));
    return m;
}

} // namespace

ResidualReport local_conservation_residual(const SpectralGrid& g, const DispersionSymbols& sy,
                                           const Trajectory& traj) {
    const int m = static_cast<int>(traj.frames.size());
    if (m < 3) throw std::invalid_argument("local_conservation_residual: need at least 3 frames");
    const double dt = traj.frames[1].t - traj.frames[0].t;
    if (dt <= 0.0) throw std::invalid_argument("local_conservation_residual: frames must advance in t");

    ResidualReport rep;
    double mass_l2sq_sum = 0.0, mom_l2sq_sum = 0.0;
    std::vector<MomentumDensities> md(m);
    for (int i = 0; i < m; ++i) md[i] = momentum_densities(g, sy, traj.frames[i].state);

    for (int i = 1; i + 1 < m; ++i) {
        const LawSpatial ls = law_spatial(g, sy, traj.frames[i].state);
        FourierField mass_res(g.n), mom_res(g.n);
        const double inv2dt = 1.0 / (2.0 * dt);
        for (int j = 0; j < g.n; ++j) {
            mass_res.c[j] = (md[i + 1].rho.c[j] - md[i - 1].rho.c[j]) * inv2dt + ls.mass_flux_div.c[j];
            mom_res.c[j] = (md[i + 1].j.c[j] - md[i - 1].j.c[j]) * inv2dt + ls.mom_spatial.c[j];
        }
        rep.mass_sup = std::max(rep.mass_sup, sup_physical(g, mass_res));
        rep.momentum_sup = std::max(rep.momentum_sup, sup_physical(g, mom_res));
        mass_l2sq_sum += dt * l2sq(g, mass_res);
        mom_l2sq_sum += dt * l2sq(g, mom_res);
    }
    rep.mass_l2 = std::sqrt(mass_l2sq_sum);
    rep.momentum_l2 = std::sqrt(mom_l2sq_sum);
    return rep;
}

FrameResiduals frame_residuals(const SpectralGrid& g, const DispersionSymbols& sy,
                               const Trajectory& traj) {
    const int m = static_cast<int>(traj.frames.size());
    FrameResiduals fr;
    fr.mass_l2.assign(m, 0.0);
    fr.momentum_l2.assign(m, 0.0);
    if (m < 3) return fr;
    const double dt = traj.frames[1].t - traj.frames[0].t;

    std::vector<MomentumDensities> md(m);
    for (int i = 0; i < m; ++i) md[i] = momentum_densities(g, sy, traj.frames[i].state);

    auto time_diff = [&](const std::vector<MomentumDensities>& v, bool rho_part, int i) {
        FourierField d(g.n);
        auto pick = [&](int idx) -> const FourierField& { return rho_part ? v[idx].rho : v[idx].j; };
        if (i == 0) {
            for (int j = 0; j < g.n; ++j)
                d.c[j] = (-3.0 * pick(0).c[j] + 4.0 * pick(1).c[j] - pick(2).c[j]) / (2.0 * dt);
        } else if (i == m - 1) {
            for (int j = 0; j < g.n; ++j)
                d.c[j] = (3.0 * pick(m - 1).c[j] - 4.0 * pick(m - 2).c[j] + pick(m - 3).c[j]) / (2.0 * dt);
        } else {
            for (int j = 0; j < g.n; ++j) d.c[j] = (pick(i + 1).c[j] - pick(i - 1).c[j]) / (2.0 * dt);
        }
        return d;
    };

    for (int i = 0; i < m; ++i) {
        const LawSpatial ls = law_spatial(g, sy, traj.frames[i].state);
        FourierField mass_res = time_diff(md, true, i);
        FourierField mom_res = time_diff(md, false, i);
        for (int j = 0; j < g.n; ++j) {
            mass_res.c[j] += ls.mass_flux_div.c[j];
            mom_res.c[j] += ls.mom_spatial.c[j];
        }
        fr.mass_l2[i] = std::sqrt(l2sq(g, mass_res));
        fr.momentum_l2[i] = std::sqrt(l2sq(g, mom_res));
    }
    return fr;
}

} // namespace qzak
