#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qzak/quadrature.hpp"

namespace qzak {

// ---------------------------------------------------------------------------
// Exponent bookkeeping for the bilinear-kernel experiments.
//
// All weight exponents derive from one small parameter theta:
//   b  = b1  = 1/2 + theta/2        (time-regularity exponents, > 1/2)
//   b' = b1' = -1/2 + theta         (dual exponents, in (-1/2, 0))
//   c  = -b', c1 = -b1'             (= 1/2 - theta)
//   B1 = c1, B2 = b1, 2B = 2*B1 - max(1 - 2*B2, 0)   (effective decay power
//                                    of the inner time-frequency integral)
// ---------------------------------------------------------------------------

enum class KernelKind { C1, C2, C3 };

std::string kernel_name(KernelKind k);

struct EstimateConfig {
    double theta = 0.05;  // small positive parameter driving all exponents
    double k = 0.0;       // Sobolev exponent of the Schrodinger factor
    double l = 0.0;       // Sobolev exponent of the wave factor
    double eps = 1.0;     // dispersion parameter, in (0, 1]

    double b() const { return 0.5 + 0.5 * theta; }
    double b1() const { return 0.5 + 0.5 * theta; }
    double b_prime() const { return -0.5 + theta; }
    double b1_prime() const { return -0.5 + theta; }
    double c() const { return 0.5 - theta; }
    double c1() const { return 0.5 - theta; }
    double big_b1() const { return 0.5 - theta; }
    double big_b2() const { return 0.5 + 0.5 * theta; }
    double big_b() const;  // B with 2B = 2*B1 - [1 - 2*B2]_+
};

// Throws std::invalid_argument naming the offending field when the exponent
// windows required by the chosen kernel are violated.
void validate_estimate_config(const EstimateConfig& cfg, KernelKind kind);

// ---------------------------------------------------------------------------
// Resonance algebra.
// ---------------------------------------------------------------------------

// Expanded form tau + (2 xi + eps^2 xi^3) eta + 4 eps^2 xi eta^3 of the
// resonance function tau - Phi(xi1 - xi) + Phi(xi1) under xi1 = xi/2 + eta.
// Preferred near eta << xi, where the direct difference cancels.
double resonance_cubic(double tau, double xi, double eta, double eps);

// Direct evaluation tau - Phi(eta - xi/2) + Phi(eta + xi/2), for cross-checks.
double resonance_direct(double tau, double xi, double eta, double eps);

// ---------------------------------------------------------------------------
// Two-weight time-frequency integral
//   T(s1, s2) = Int dx (1+|x-s1|)^{-2 a_minus} (1+|x-s2|)^{-2 a_plus}
// with the decay certificate T <= C <s1-s2>^{-alpha},
// alpha = 2 a_minus - [1 - 2 a_plus]_+.
// ---------------------------------------------------------------------------

struct TauIntegral {
    double value = 0.0;
    double bound_ratio = 0.0;  // value * <s1-s2>^alpha
    double alpha = 0.0;
    std::size_t evaluations = 0;
    bool converged = true;
};

// Pre: 0 <= a_minus <= a_plus and a_minus + a_plus > 1/2 (else throws).
TauIntegral weighted_tau_integral(double a_minus, double a_plus, double s1, double s2,
                                  const QuadOptions& opt = {});

// Precomputed profile D -> T(0, D) on a log grid with cubic log-log
// interpolation; exact power-law extrapolation beyond the table.  Makes the
// kernel scans cheap: every inner integral reduces to lookups.
class TauProfile {
  public:
    TauProfile(double a_minus, double a_plus);
    double operator()(double distance) const;  // T at |s1-s2| = distance
    double at_zero() const { return t0_; }
    double a_minus() const { return am_; }
    double a_plus() const { return ap_; }

  private:
    double am_, ap_, t0_;
    double log_d_min_, inv_step_;
    std::vector<double> log_t_;
    double tail_slope_;
};

// ---------------------------------------------------------------------------
// One-variable modulation integral
//   L(tau, xi) = Int d eta <tau + (2 xi + eps^2 xi^3) eta + 4 eps^2 xi eta^3>^{-2B}
// with certificate L <= C(B, eps) <Gamma>^{-(2B - 1/4)}, Gamma = xi^2 + eps^2 xi^4.
// ---------------------------------------------------------------------------

struct EtaIntegral {
    double tau = 0.0, xi = 0.0;
    double lhs = 0.0;   // quadrature value of L
    double rhs = 0.0;   // <Gamma>^{-(2B - 1/4)}
    double ratio = 0.0; // lhs / rhs
    std::size_t evaluations = 0;
};

// Pre: xi >= 1 and B in (1/6, 1/2).  Throws std::runtime_error naming
// (tau, xi) if the quadrature fails to converge.
EtaIntegral eta_integral_bound(double tau, double xi, double eps, double big_b,
                               const QuadOptions& opt = {});

// ---------------------------------------------------------------------------
// Kernel supremum scans.
//
//   C1(tau, xi) = <xi>^{-l} <tau +- sqrt(Phi(xi))>^{-b}
//                 * ( Int <xi1>^{2k} <xi1-xi>^{-2k} T_{(c1,b1)}(D) dxi1 )^{1/2}
//   C2(tau, xi) = <xi>^{l} <tau +- sqrt(Phi(xi))>^{b'}
//                 * ( Int <xi1>^{-2k} <xi1-xi>^{-2k} T_{(b1,b1)}(D) dxi1 )^{1/2}
//       with D = |tau - Phi(xi1-xi) + Phi(xi1)| (expanded cubic form)
//   C3(tau, xi) = <xi>^{-k} <tau + Phi(xi)>^{-b1}
//                 * ( Int <xi1-xi>^{2l} <xi1>^{-2k} T_{(c,b1)}(D') dxi1 )^{1/2}
//       with D' = |tau -+ sqrt(Phi(xi1-xi)) + Phi(xi1)|, worst of both signs.
//
// The +- in the outer weight is resolved to the larger factor (smaller
// bracket), i.e. the worst case the norm estimates must control.
// ---------------------------------------------------------------------------

struct ScanPoint {
    double tau = 0.0;
    double xi = 0.0;
    double kernel_value = 0.0;  // square root of the inner integral
    double prefactor = 0.0;
    double product = 0.0;       // prefactor * kernel_value
};

struct ScanConfig {
    KernelKind kind = KernelKind::C1;
    EstimateConfig est;
    int n_tau = 40;               // log-spaced |tau| samples (each sign)
    int n_xi = 40;                // log-spaced xi samples
    double tau_abs_min = 1.0;
    double tau_abs_max = 1.0e4;
    double xi_min = 1.0;
    double xi_max = 1.0e3;
    bool include_case_boundaries = true;  // add tau at the case-split values
    int threads = 1;
};

struct ScanResult {
    ScanConfig config;
    std::vector<ScanPoint> points;        // row-major: xi outer, tau inner
    double supremum = 0.0;
    double argmax_tau = 0.0;
    double argmax_xi = 0.0;
    std::vector<double> xi_series;        // per-xi maxima of `product`
    std::vector<double> sup_per_xi;
    double slope = 0.0;                   // least-squares log-log slope of sup_per_xi
    double seconds = 0.0;
    std::vector<std::string> warnings;    // non-converged quadratures, capped
};

ScanResult kernel_sup_scan(const ScanConfig& cfg);

// Least-squares slope of log(y) against log(x); pairs with y <= 0 are skipped.
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

// ---------------------------------------------------------------------------
// Stationary-point geometry of the mixed wave/Schrodinger phases
//   f(xi1) = tau + s * sqrt(Phi(xi1 -+ xi... )) + Phi(xi1)  on  xi1 >= 0
// in the four sign combinations, plus the cubic resonance branch.
// ---------------------------------------------------------------------------

enum class PhaseBranch {
    schro_schro,     // tau - Phi(xi1-xi) + Phi(xi1), cubic in eta = xi1 - xi/2
    wave_plus,       // tau + sqrt(Phi(xi1-xi)) + Phi(xi1)
    wave_minus,      // tau - sqrt(Phi(xi1+xi)) + Phi(xi1)
    wave_plus_far,   // tau + sqrt(Phi(xi1+xi)) + Phi(xi1)
    wave_minus_far,  // tau - sqrt(Phi(xi1-xi)) + Phi(xi1)
};

std::string phase_branch_name(PhaseBranch b);

struct ResonanceGeometry {
    double tau = 0.0, xi = 0.0, eps = 1.0;
    double gamma = 0.0;     // xi^2 + eps^2 xi^4
    double a_scale = 0.0;   // eps^{-2/3} |tau/xi|^{1/3}
    PhaseBranch branch = PhaseBranch::schro_schro;  // collapsed to the three classes
    double a_m = 0.0;       // minimizer of f - tau on xi1 >= 0 (NaN for cubic branch)
    double m = 0.0;         // signed minimum offset f(A_m) - tau
    double lambda_plus = 0.0;   // classified modulation size for the +sqrt branch
    double lambda_minus = 0.0;  // ... and for the -sqrt branch
    bool lambda_plus_order_one = false;   // tau within [-sqrtPhi, -sqrtPhi/2]
    bool lambda_minus_order_one = false;  // tau within [sqrtPhi, 3 sqrtPhi/2]
    double root_r = 0.0;    // eta-root of the cubic (cubic branch only)
    double a2 = 0.0;        // upper zero of f past A_m when min f < 0 (wave branches)
    double min_f_second = 0.0;  // smallest sampled second derivative away from the kink
    bool convex_certified = false;
};

// Pre: xi > 0, eps in (0,1].  Throws std::runtime_error with diagnostics on
// bracket failure (which the convexity of each segment rules out).
ResonanceGeometry stationary_points(double tau, double xi, double eps, PhaseBranch branch);

// Phase value f(xi1) for a wave branch (for profiles and direct checks).
double wave_phase_value(double tau, double xi, double eps, PhaseBranch branch, double xi1);
// Analytic second derivative of the same phase (xi1 must avoid the kink).
double wave_phase_second_derivative(double xi, double eps, PhaseBranch branch, double xi1);

// ---------------------------------------------------------------------------
// Admissible-exponent region
//   A = { -3/2 < k-l < 3/2, k >= 0 }  union
//       { 2k-l > -3/2, k+l > -3/2, -3/4 < k < 0 }
// ---------------------------------------------------------------------------

struct RegionCheck {
    bool inside = false;
    std::vector<std::string> active_constraints;  // every clause with hold/fail status
};

RegionCheck region_membership(double k, double l);

// Ordered polyline of the region boundary clipped to k in [k_min, k_max];
// includes the corner (-3/4, -3/4).  Returned as (k, l) pairs.
std::vector<std::pair<double, double>> region_boundary_polyline(double k_max = 3.0);

// ---------------------------------------------------------------------------
// Restricted integral around xi1 = xi:
//   Int_{xi/2}^{3 xi/2} <xi1-xi>^{2l} <xi1>^{-2k} <tau +- sqrt(Phi(xi1-xi)) + Phi(xi1)>^{-2B} dxi1
// with certificate  <= C(eps) <xi>^{-2k} <xi>^{-(6B-)};  worst of both signs.
// ---------------------------------------------------------------------------

struct AroundXiIntegral {
    double tau = 0.0, xi = 0.0;
    double value = 0.0;        // max over the two sign choices
    double bound_ratio = 0.0;  // value * <xi>^{2k} * <xi>^{6B - 0.01}
    std::size_t evaluations = 0;
};

// Pre: k < 0, l < 0, B in (0, 1/2), xi > 32/eps^2 (else throws naming the field).
AroundXiIntegral around_xi_integral(double tau, double xi, double eps, double k, double l,
                                    double big_b, const QuadOptions& opt = {});

// ---------------------------------------------------------------------------
// Plot-data helpers.
// ---------------------------------------------------------------------------

struct ProfilePoint {
    double xi1 = 0.0;
    double f_value = 0.0;
};

// Samples f(xi1) on [0, hi] (kink node inserted exactly when inside range).
std::vector<ProfilePoint> phase_profile(double tau, double xi, double eps,
                                        PhaseBranch branch, double hi, int samples);

}  // namespace qzak
