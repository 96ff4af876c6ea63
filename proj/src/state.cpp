#include "qzak/state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qzak {

SplitState split_state(const SpectralGrid& g, const DispersionSymbols& sy, const PrimalState& p) {
    FourierField li = apply_symbol(g, sy, Symbol::lambda_inv, p.nt);
    SplitState s;
    s.E = p.E;
    s.t = p.t;
    s.n_plus = p.n;
    s.n_minus = p.n;
    const cplx i1(0.0, 1.0);
    for (int j = 0; j < g.n; ++j) {
        s.n_plus.c[j] += i1 * li.c[j];
        s.n_minus.c[j] -= i1 * li.c[j];
    }
    return s;
}

PrimalState unsplit_state(const SpectralGrid& g, const DispersionSymbols& sy, const SplitState& s) {
    PrimalState p;
    p.E = s.E;
    p.t = s.t;
    p.n.c.resize(g.n);
    FourierField diff;
    diff.c.resize(g.n);
    for (int j = 0; j < g.n; ++j) {
        p.n.c[j] = 0.5 * (s.n_plus.c[j] + s.n_minus.c[j]);
        diff.c[j] = (s.n_plus.c[j] - s.n_minus.c[j]) / cplx(0.0, 2.0);
    }
    p.nt = apply_symbol(g, sy, Symbol::lambda, diff);
    return p;
}

namespace {

// Nearest periodic image of x-center on a box of length L.
double wrapped_offset(double x, double center, double length) {
    double d = x - center;
    d -= length * std::round(d / length);
    return d;
}

} // namespace

FourierField gaussian_profile(const SpectralGrid& g, double amplitude, double width, double center) {
    if (width <= 0.0) throw std::invalid_argument("gaussian_profile: width must be positive");
    return field_from_function(g, [&](double x) {
        const double d = wrapped_offset(x, center, g.length);
        return cplx(amplitude * std::exp(-d * d / (2.0 * width * width)), 0.0);
    });
}

FourierField sech_profile(const SpectralGrid& g, double amplitude, double width, double center) {
    if (width <= 0.0) throw std::invalid_argument("sech_profile: width must be positive");
    return field_from_function(g, [&](double x) {
        const double d = wrapped_offset(x, center, g.length);
        return cplx(amplitude / std::cosh(d / width), 0.0);
    });
}

FourierField plane_wave(const SpectralGrid& g, int wavenumber) {
    FourierField f;
    f.c.assign(g.n, cplx(0.0, 0.0));
    f.c[g.mode_index(wavenumber)] = 1.0;
    return f;
}

FourierField cosine_profile(const SpectralGrid& g, double amplitude, int wavenumber) {
    FourierField f;
    f.c.assign(g.n, cplx(0.0, 0.0));
    if (wavenumber == 0) {
        f.c[0] = amplitude;
    } else {
        f.c[g.mode_index(wavenumber)] = 0.5 * amplitude;
        f.c[g.mode_index(-wavenumber)] = 0.5 * amplitude;
    }
    return f;
}

FourierField random_sobolev_data(const SpectralGrid& g, double s, double amplitude, bool real_field,
                                 CounterRng& rng) {
    FourierField f;
    f.c.assign(g.n, cplx(0.0, 0.0));
    const double decay = s + 0.5 + 0.01;
    const double two_pi = 2.0 * std::numbers::pi;
    if (real_field) {
        // Positive wavenumbers get random phases; negatives mirror; mean stays zero.
        for (int k = 1; k < g.n / 2; ++k) {
            const double xi = two_pi * k / g.length;
            const double mag = amplitude * std::pow(1.0 + xi, -decay);
            const double ph = two_pi * rng.next_double();
            const cplx c = mag * cplx(std::cos(ph), std::sin(ph));
            f.c[g.mode_index(k)] = c;
            f.c[g.mode_index(-k)] = std::conj(c);
        }
    } else {
        for (int j = 0; j < g.n; ++j) {
            if (j == g.nyquist_index()) continue;
            const double mag = amplitude * std::pow(1.0 + std::abs(g.xi[j]), -decay);
            const double ph = two_pi * rng.next_double();
            f.c[j] = mag * cplx(std::cos(ph), std::sin(ph));
        }
    }
    apply_dealias(g, f);
    return f;
}

} // namespace qzak
