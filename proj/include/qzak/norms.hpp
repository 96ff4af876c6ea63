#pragma once

#include <vector>

#include "qzak/grid.hpp"
#include "qzak/symbols.hpp"

namespace qzak {

// H^s norm on [0, L): sqrt( L * sum_j (1+xi_j^2)^s |c_j|^2 ).
// s = 0 gives the spatial L^2 norm.
double sobolev_norm(const SpectralGrid& g, const FourierField& f, double s);

// Phase choice for the space-time (Bourgain) norm weight:
//   schrodinger : <tau + Phi_eps(xi)>^b   (free envelope waves sit on tau = -Phi)
//   wave_plus   : <tau + sqrt(Phi)>^b     (free n_plus waves sit on tau = -sqrt(Phi))
//   wave_minus  : <tau - sqrt(Phi)>^b     (free n_minus waves sit on tau = +sqrt(Phi))
enum class Phase { schrodinger, wave_plus, wave_minus };

// Discrete X^{s,b} norm of a time-windowed trajectory.
// frames: M >= 8 coefficient snapshots, uniformly sampled over [0, window_T),
// assumed pre-multiplied by a smooth time cutoff so the periodic extension is smooth.
// Spatial bracket uses <xi> = 1+|xi| (matching the estimate-lab convention);
// value = sqrt( L * T * sum_{j,m} w(xi_j, tau_m)^2 |c_{j,m}|^2 ).
double bourgain_norm(const SpectralGrid& g, const DispersionSymbols& sy,
                     const std::vector<FourierField>& frames, double window_T,
                     double s, double b, Phase phase);

} // namespace qzak
