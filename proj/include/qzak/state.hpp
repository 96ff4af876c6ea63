#pragma once

#include <vector>

#include "qzak/grid.hpp"
#include "qzak/rng.hpp"
#include "qzak/symbols.hpp"

namespace qzak {

// Second-order form of the coupled system: envelope E (complex), density
// fluctuation n and its time derivative nt (both real-valued).
struct PrimalState {
    FourierField E;
    FourierField n;
    FourierField nt;
    double t = 0.0;
};

// First-order form via the half-wave splitting n_pm = n ± i Lambda^{-1} nt.
// For states originating from real (n, nt), n_minus(x) = conj(n_plus(x)).
struct SplitState {
    FourierField E;
    FourierField n_plus;
    FourierField n_minus;
    double t = 0.0;
};

// n_plus = n + i Lambda^{-1} nt, n_minus = n - i Lambda^{-1} nt.
// Requires nt zero-mean (Lambda^{-1} precondition).
SplitState split_state(const SpectralGrid& g, const DispersionSymbols& sy, const PrimalState& p);

// Inverse map: n = (n_plus + n_minus)/2, nt = Lambda (n_plus - n_minus)/(2i).
PrimalState unsplit_state(const SpectralGrid& g, const DispersionSymbols& sy, const SplitState& s);

// --- Initial data profiles (values in physical space, returned as coefficients) ---

// amplitude * exp(-(x-center)^2 / (2 width^2)), wrapped periodically via nearest image.
FourierField gaussian_profile(const SpectralGrid& g, double amplitude, double width, double center);

// amplitude * sech((x-center)/width), wrapped via nearest image.
FourierField sech_profile(const SpectralGrid& g, double amplitude, double width, double center);

// exp(i kappa x) with kappa = 2*pi*wavenumber/L (exactly one Fourier mode).
FourierField plane_wave(const SpectralGrid& g, int wavenumber);

// amplitude * cos(kappa x), kappa = 2*pi*wavenumber/L.
FourierField cosine_profile(const SpectralGrid& g, double amplitude, int wavenumber);

// Random data with |c(xi)| = amplitude * (1+|xi|)^{-(s+1/2)-0.01} and uniform random
// phases: lies in H^s but (almost surely) in no better Sobolev space.
// real_field: enforce conjugate symmetry (real-valued samples) and zero mean.
FourierField random_sobolev_data(const SpectralGrid& g, double s, double amplitude, bool real_field,
                                 CounterRng& rng);

// Time-stamped snapshot with scalar diagnostics attached at recording time.
struct Frame {
    double t = 0.0;
    PrimalState state;
    double mass = 0.0;
    double hamiltonian = 0.0;
    double h_terms[6] = {0, 0, 0, 0, 0, 0};
};

struct Trajectory {
    std::vector<Frame> frames;
    bool blew_up = false;
    double blowup_time = 0.0;
};

} // namespace qzak
