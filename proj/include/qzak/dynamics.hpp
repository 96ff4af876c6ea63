#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qzak/state.hpp"

namespace qzak {

// Raised when a time integrator produces non-finite field values.
class BlowupError : public std::runtime_error {
  public:
    BlowupError(double t_, const std::string& what_) : std::runtime_error(what_), t(t_) {}
    double t;
};

// Exact linear flow over time t, applied mode-by-mode:
//   E       *= exp(-i t Phi_eps(xi))      (free envelope equation)
//   n_plus  *= exp(-i t sqrt(Phi_eps))    (half-wave  i d/dt = +Lambda)
//   n_minus *= exp(+i t sqrt(Phi_eps))    (half-wave  i d/dt = -Lambda)
// The signs make unsplit(free_evolve(split(p))) solve the linear wave equation
// n_tt - n_xx + eps^2 n_xxxx = 0 with nt staying the true time derivative of n.
SplitState free_evolve(const SpectralGrid& g, const DispersionSymbols& sy, const SplitState& s,
                       double t);

struct SplitTendency {
    FourierField dE;
    FourierField dn_plus;
    FourierField dn_minus;
};

// Nonlinear part of the first-order system (products dealiased):
//   dE/dt       = -i * (n_plus+n_minus)/2 * E
//   dn_plus/dt  = +i * Lambda^{-1} Laplacian |E|^2
//   dn_minus/dt = -i * Lambda^{-1} Laplacian |E|^2
SplitTendency nonlinear_rhs(const SpectralGrid& g, const DispersionSymbols& sy, const SplitState& s);

// Strang step: half linear flow, full nonlinear substep, half linear flow.
// The nonlinear substep is exact: (n_plus+n_minus) and |E|^2 are both invariant
// under it, so E gets the pointwise phase exp(-i*dt*(n_plus+n_minus)/2) and the
// n_pm coefficients get the constant tendency times dt.
SplitState step_strang(const SpectralGrid& g, const DispersionSymbols& sy, const SplitState& s,
                       double dt);

struct PicardResult {
    std::vector<double> times;                     // n_time_nodes uniform nodes on [0, T]
    std::vector<std::vector<SplitState>> iterates; // iterates[k][m]: k-th iterate at times[m]
    std::vector<double> residuals;                 // residuals[k-1] = sup_t ||iter_k - iter_{k-1}||_{L2}
    bool diverged = false;
};

// Fixed-point iteration for the integral form
//   E(t)    = S(t) E0      - (i/2) int_0^t S(t-s) [(n_plus+n_minus)E](s) ds
//   n_pm(t) = W_pm(t) n0pm  pm  i  int_0^t W_pm(t-s) Lambda^{-1} Laplacian |E|^2(s) ds
// with trapezoid quadrature on uniform time nodes.  Divergence (residual ratio
// above 1 three times in a row) is flagged, not fatal.
PicardResult picard_iterate(const SpectralGrid& g, const DispersionSymbols& sy, const SplitState& s0,
                            double t_final, int n_time_nodes, int n_iters);

enum class Integrator { strang, picard };

enum class ProfileKind { zero, gaussian, soliton, plane_wave, cosine, random_sobolev, adiabatic };

struct ProfileSpec {
    ProfileKind kind = ProfileKind::zero;
    double amplitude = 1.0;
    double width = 1.0;
    double center = -1.0;  // negative means the box midpoint L/2
    int wavenumber = 1;
    double exponent = 1.0;  // Sobolev index s for random_sobolev data
};

struct SimConfig {
    int n = 256;
    double length = 100.53096491487338;  // 32*pi
    double eps = 1.0;
    double dt = 1e-3;
    double t_final = 1.0;
    Integrator integrator = Integrator::strang;
    ProfileSpec e0;
    ProfileSpec n0;
    ProfileSpec nt0;
    int record_stride = 10;  // record a frame every this many steps
    std::uint64_t seed = 0;
    int picard_nodes = 17;  // time nodes per window when integrator == picard
    int picard_iters = 6;
};

// Build one field from a profile descriptor.  `for_density` enforces a
// real-valued result; `e_field` supplies |E|^2 for the adiabatic profile.
FourierField make_profile(const SpectralGrid& g, const ProfileSpec& spec, bool for_density,
                          double eps, const FourierField* e_field, CounterRng& rng);

// Assemble the initial state (E, n, nt) from the config descriptors.
PrimalState make_initial_state(const SpectralGrid& g, const DispersionSymbols& sy,
                               const SimConfig& cfg);

// Run the configured integrator, recording diagnostics every record_stride
// steps (plus the first and last step).  On blow-up the trajectory collected so
// far is returned with blew_up set.
Trajectory simulate(const SimConfig& cfg);

// Throws std::invalid_argument naming the offending field.
void validate(const SimConfig& cfg);

} // namespace qzak
