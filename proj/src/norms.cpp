#include "qzak/norms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qzak/fft.hpp"

namespace qzak {

double sobolev_norm(const SpectralGrid& g, const FourierField& f, double s) {
    if (f.size() != g.n) throw std::invalid_argument("sobolev_norm: size mismatch");
    double acc = 0.0;
    for (int j = 0; j < g.n; ++j) {
        const double w = std::pow(1.0 + g.xi[j] * g.xi[j], s);
        acc += w * std::norm(f.c[j]);
    }
    return std::sqrt(g.length * acc);
}

double bourgain_norm(const SpectralGrid& g, const DispersionSymbols& sy,
                     const std::vector<FourierField>& frames, double window_T,
                     double s, double b, Phase phase) {
    const int m = static_cast<int>(frames.size());
    if (m < 8) throw std::invalid_argument("bourgain_norm: need at least 8 time samples");
    if (window_T <= 0.0) throw std::invalid_argument("bourgain_norm: window_T must be positive");
    for (const auto& f : frames)
        if (f.size() != g.n) throw std::invalid_argument("bourgain_norm: frame size mismatch");

    // Time frequencies in FFTW order for an M-point window of length T.
    std::vector<double> tau(m);
    for (int k = 0; k < m; ++k) {
        const int wk = (k <= m / 2) ? k : k - m;
        tau[k] = 2.0 * std::numbers::pi * wk / window_T;
    }

    std::vector<cplx> series(m), hat(m);
    double acc = 0.0;
    for (int j = 0; j < g.n; ++j) {
        for (int k = 0; k < m; ++k) series[k] = frames[k].c[j];
        dft_forward(series, hat);
        double base = 0.0;
        switch (phase) {
            case Phase::schrodinger: base = sy.phi[j]; break;
            case Phase::wave_plus: base = sy.sqrt_phi[j]; break;
            case Phase::wave_minus: base = -sy.sqrt_phi[j]; break;
        }
        const double wxi = std::pow(1.0 + std::abs(g.xi[j]), s);
        for (int k = 0; k < m; ++k) {
            const double wtau = std::pow(1.0 + std::abs(tau[k] + base), b);
            const double w = wxi * wtau;
            acc += w * w * std::norm(hat[k] / static_cast<double>(m));
        }
    }
    return std::sqrt(g.length * window_T * acc);
}

} // namespace qzak
