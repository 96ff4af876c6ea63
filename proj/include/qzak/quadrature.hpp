#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace qzak {

struct QuadOptions {
    double rel_tol = 1e-10;        // target relative accuracy of the total
    double abs_tol = 0.0;          // absolute floor for the accuracy target
    std::size_t max_intervals = 4000;  // refinement budget per call
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;            // estimated absolute error
    std::size_t evaluations = 0;
    bool converged = true;
    bool finite = true;            // false once any sample was non-finite (fatal)
};

using Integrand = std::function<double(double)>;

// 15-point Kronrod rule with embedded 7-point Gauss error estimate on [a,b].
QuadResult gauss_kronrod_15(const Integrand& f, double a, double b);

// Globally adaptive quadrature on [a,b]: repeatedly bisects the interval with
// the largest error estimate until the summed estimate meets the tolerance or
// the interval budget is exhausted (converged=false in that case).
QuadResult integrate_adaptive(const Integrand& f, double a, double b,
                              const QuadOptions& opt = {});

// Same, but the domain is pre-split at the given interior breakpoints (kinks,
// near-singular peaks, resonance roots) so each piece starts smooth.
// Breakpoints outside (a,b) are ignored; duplicates are merged.
QuadResult integrate_segmented(const Integrand& f, double a, double b,
                               std::vector<double> breakpoints,
                               const QuadOptions& opt = {});

// Integral over [a, +inf) for an eventually power-law-decaying integrand.
// Marches geometric windows [x, 2x) until the analytic tail estimate
// f(X)*X/(p-1) -- with p the decay power measured on the last window -- is
// below tolerance, or the integrand has fallen below 1e-14 of the largest
// value seen; the tail estimate is then added to the result.
QuadResult integrate_power_tail(const Integrand& f, double a, double scale,
                                const QuadOptions& opt = {});

}  // namespace qzak
