#include "qzak/symbols.hpp"

#include <cmath>
#include <stdexcept>

namespace qzak {

double phi_eps(double xi, double eps) {
    const double x2 = xi * xi;
    return x2 + eps * eps * x2 * x2;
}

DispersionSymbols make_symbols(const SpectralGrid& g, double eps) {
    if (eps < 0.0 || eps > 1.0)
        throw std::invalid_argument("make_symbols: eps must lie in [0, 1]");
    DispersionSymbols sy;
    sy.eps = eps;
    sy.phi.resize(g.n);
    sy.sqrt_phi.resize(g.n);
    for (int j = 0; j < g.n; ++j) {
        sy.phi[j] = phi_eps(g.xi[j], eps);
        sy.sqrt_phi[j] = std::sqrt(sy.phi[j]);
    }
    return sy;
}

namespace {

void require_zero_mean(const FourierField& f, const char* op) {
    double scale = 0.0;
    for (const auto& z : f.c) scale = std::max(scale, std::abs(z));
    if (std::abs(f.c[0]) > 1e-13 * std::max(scale, 1e-300))
        throw std::invalid_argument(std::string(op) + ": input must have zero mean");
}

} // namespace

FourierField apply_symbol(const SpectralGrid& g, const DispersionSymbols& sy, Symbol which,
                          const FourierField& f, double alpha) {
    if (f.size() != g.n) throw std::invalid_argument("apply_symbol: size mismatch");
    FourierField out = f;
    const int nyq = g.nyquist_index();
    switch (which) {
        case Symbol::delta_eps:
            for (int j = 0; j < g.n; ++j) out.c[j] *= -sy.phi[j];
            break;
        case Symbol::laplacian:
            for (int j = 0; j < g.n; ++j) out.c[j] *= -g.xi[j] * g.xi[j];
            break;
        case Symbol::lambda:
            for (int j = 0; j < g.n; ++j) out.c[j] *= sy.sqrt_phi[j];
            break;
        case Symbol::lambda_inv:
            require_zero_mean(f, "lambda_inv");
            out.c[0] = 0.0;
            for (int j = 1; j < g.n; ++j) out.c[j] /= sy.sqrt_phi[j];
            break;
        case Symbol::lambda_inv_delta:
            // -xi^2 / sqrt(xi^2 + eps^2 xi^4) = -|xi| / sqrt(1 + eps^2 xi^2); bounded, 0 at xi=0
            out.c[0] = 0.0;
            for (int j = 1; j < g.n; ++j)
                out.c[j] *= -std::abs(g.xi[j]) / std::sqrt(1.0 + sy.eps * sy.eps * g.xi[j] * g.xi[j]);
            break;
        case Symbol::d_eps:
            for (int j = 0; j < g.n; ++j)
                out.c[j] *= std::pow(1.0 + 6.0 * sy.eps * sy.eps * g.xi[j] * g.xi[j], 0.5 * alpha);
            break;
        case Symbol::dx:
            for (int j = 0; j < g.n; ++j) out.c[j] *= cplx(0.0, g.xi[j]);
            out.c[nyq] = 0.0;  // odd symbol has no consistent real value at Nyquist
            break;
        case Symbol::dx_inv:
            require_zero_mean(f, "dx_inv");
            out.c[0] = 0.0;
            for (int j = 1; j < g.n; ++j) out.c[j] /= cplx(0.0, g.xi[j]);
            out.c[nyq] = 0.0;
            break;
    }
    return out;
}

} // namespace qzak
