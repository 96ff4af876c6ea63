#pragma once
#include "qzak/grid.hpp"

namespace qzak {

// Dispersion relation of the fourth-order Schrodinger part: Phi_eps(xi) = xi^2 + eps^2 xi^4.
double phi_eps(double xi, double eps);

// Per-mode tables for the operators built from Phi_eps on a fixed grid:
//   delta_eps      multiplies by -Phi_eps(xi)            (Laplacian - eps^2 bi-Laplacian)
//   lambda         multiplies by sqrt(Phi_eps(xi))       ((-Delta + eps^2 Delta^2)^{1/2})
//   lambda_inv     multiplies by 1/sqrt(Phi_eps(xi))     (zero mode must vanish)
//   lambda_inv_delta multiplies by -xi^2/sqrt(Phi_eps)   (bounded; 0 at xi=0, also fine at eps=0)
//   d_eps(alpha)   multiplies by (1 + 6 eps^2 xi^2)^{alpha/2}
//   dx             multiplies by i*xi                    (Nyquist zeroed)
//   dx_inv         multiplies by 1/(i*xi)                (zero mode must vanish; Nyquist zeroed)
struct DispersionSymbols {
    double eps = 1.0;
    std::vector<double> phi;       // Phi_eps(xi_j)
    std::vector<double> sqrt_phi;  // sqrt(Phi_eps(xi_j))
};

DispersionSymbols make_symbols(const SpectralGrid& g, double eps);

enum class Symbol {
    delta_eps,
    lambda,
    lambda_inv,
    lambda_inv_delta,
    d_eps,
    dx,
    dx_inv,
    laplacian,
};

// alpha is used by d_eps only.  lambda_inv and dx_inv reject input whose mean
// (zero mode) is not negligible relative to the field size.
FourierField apply_symbol(const SpectralGrid& g, const DispersionSymbols& sy, Symbol which,
                          const FourierField& f, double alpha = 0.0);

} // namespace qzak
