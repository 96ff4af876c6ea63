#pragma once

#include <array>

#include "qzak/grid.hpp"
#include "qzak/state.hpp"
#include "qzak/symbols.hpp"

namespace qzak {

struct ConservationReport {
    double mass = 0.0;
    double hamiltonian = 0.0;
    double momentum = 0.0;
    // Integrals of |E_x|^2, eps^2|E_xx|^2, n|E|^2, n^2/2, |V|^2/2, (eps^2/2)|n_x|^2
    // with V = -Dx^{-1} nt.  hamiltonian equals the sum of these terms.
    std::array<double, 6> h_terms{};
};

// Integral of |E|^2 over [0, L), evaluated spectrally (Parseval).
double mass(const SpectralGrid& g, const PrimalState& p);

// H = integral of |E_x|^2 + eps^2|E_xx|^2 + n|E|^2 + n^2/2 + |V|^2/2 + (eps^2/2)|n_x|^2.
// Requires nt zero-mean (for the antiderivative V).
ConservationReport conservation_report(const SpectralGrid& g, const DispersionSymbols& sy,
                                       const PrimalState& p);

struct MomentumDensities {
    FourierField rho;  // |E|^2
    FourierField j;    // i(E dEbar - Ebar dE) = 2 Im(Ebar E_x)
    FourierField j_q;  // i(E d3Ebar - dE d2Ebar + d2E dEbar - d3E Ebar)
};

MomentumDensities momentum_densities(const SpectralGrid& g, const DispersionSymbols& sy,
                                     const PrimalState& p);

struct ResidualReport {
    double mass_sup = 0.0;
    double mass_l2 = 0.0;
    double momentum_sup = 0.0;
    double momentum_l2 = 0.0;
};

// Residuals of the local mass law  d/dt rho + d/dx J - eps^2 d/dx J_Q = 0  and the
// local momentum law, evaluated with spectral x-derivatives and 2nd-order centered
// time differences on the stored frames.  Needs >= 3 frames at uniform spacing.
ResidualReport local_conservation_residual(const SpectralGrid& g, const DispersionSymbols& sy,
                                           const Trajectory& traj);

// Per-frame spatial L2 norms of the two law residuals, one value per frame
// (one-sided 2nd-order differences at the ends).  Used for CSV diagnostics.
struct FrameResiduals {
    std::vector<double> mass_l2;
    std::vector<double> momentum_l2;
};
FrameResiduals frame_residuals(const SpectralGrid& g, const DispersionSymbols& sy,
                               const Trajectory& traj);

} // namespace qzak
