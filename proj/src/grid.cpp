#include "qzak/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qzak {

SpectralGrid make_grid(int n, double length) {
    if (n < 8) throw std::invalid_argument("make_grid: n must be at least 8");
    if (n % 2 != 0) throw std::invalid_argument("make_grid: n must be even");
    if (!(length > 0.0)) throw std::invalid_argument("make_grid: length must be positive");
    SpectralGrid g;
    g.n = n;
    g.length = length;
    g.xi.resize(n);
    const double base = 2.0 * std::numbers::pi / length;
    for (int j = 0; j < n; ++j) g.xi[j] = base * g.wavenumber(j);
    g.dealias_keep = n / 3;
    return g;
}

FourierField field_from_physical(const SpectralGrid& g, const std::vector<cplx>& phys) {
    if (static_cast<int>(phys.size()) != g.n)
        throw std::invalid_argument("field_from_physical: size mismatch");
    FourierField f;
    dft_forward(phys, f.c);
    const double inv = 1.0 / g.n;
    for (auto& z : f.c) z *= inv;
    return f;
}

std::vector<cplx> to_physical(const SpectralGrid& g, const FourierField& f) {
    if (f.size() != g.n) throw std::invalid_argument("to_physical: size mismatch");
    std::vector<cplx> phys;
    dft_backward(f.c, phys);
    return phys;
}

FourierField field_from_function(const SpectralGrid& g, const std::function<cplx(double)>& fn) {
    std::vector<cplx> phys(g.n);
    for (int m = 0; m < g.n; ++m) phys[m] = fn(g.node(m));
    return field_from_physical(g, phys);
}

void apply_dealias(const SpectralGrid& g, FourierField& f) {
    for (int j = 0; j < g.n; ++j)
        if (std::abs(g.wavenumber(j)) > g.dealias_keep) f.c[j] = 0.0;
}

FourierField dealiased_product(const SpectralGrid& g, const FourierField& a, const FourierField& b) {
    FourierField at = a, bt = b;
    apply_dealias(g, at);
    apply_dealias(g, bt);
    auto pa = to_physical(g, at);
    auto pb = to_physical(g, bt);
    for (int m = 0; m < g.n; ++m) pa[m] *= pb[m];
    FourierField out = field_from_physical(g, pa);
    apply_dealias(g, out);
    return out;
}

FourierField dealiased_modulus_squared(const SpectralGrid& g, const FourierField& e) {
    FourierField et = e;
    apply_dealias(g, et);
    auto pe = to_physical(g, et);
    std::vector<cplx> sq(g.n);
    for (int m = 0; m < g.n; ++m) sq[m] = std::norm(pe[m]);
    FourierField out = field_from_physical(g, sq);
    apply_dealias(g, out);
    // the physical samples are real, so enforce exact conjugate symmetry
    make_conjugate_symmetric(g, out);
    return out;
}

bool is_conjugate_symmetric(const SpectralGrid& g, const FourierField& f, double tol) {
    double scale = 0.0;
    for (const auto& z : f.c) scale = std::max(scale, std::abs(z));
    if (scale == 0.0) return true;
    for (int k = 1; k < g.n / 2; ++k) {
        const cplx d = f.c[g.mode_index(k)] - std::conj(f.c[g.mode_index(-k)]);
        if (std::abs(d) > tol * scale) return false;
    }
    if (std::abs(std::imag(f.c[0])) > tol * scale) return false;
    if (std::abs(std::imag(f.c[g.nyquist_index()])) > tol * scale) return false;
    return true;
}

void make_conjugate_symmetric(const SpectralGrid& g, FourierField& f) {
    f.c[0] = cplx(std::real(f.c[0]), 0.0);
    f.c[g.nyquist_index()] = cplx(std::real(f.c[g.nyquist_index()]), 0.0);
    for (int k = 1; k < g.n / 2; ++k) {
        const cplx avg = 0.5 * (f.c[g.mode_index(k)] + std::conj(f.c[g.mode_index(-k)]));
        f.c[g.mode_index(k)] = avg;
        f.c[g.mode_index(-k)] = std::conj(avg);
    }
}

double linf_coefficient_distance(const FourierField& a, const FourierField& b) {
    double m = 0.0;
    for (size_t j = 0; j < a.c.size(); ++j) m = std::max(m, std::abs(a.c[j] - b.c[j]));
    return m;
}

double l2_distance(const SpectralGrid& g, const FourierField& a, const FourierField& b) {
    double s = 0.0;
    for (size_t j = 0; j < a.c.size(); ++j) s += std::norm(a.c[j] - b.c[j]);
    return std::sqrt(g.length * s);
}

} // namespace qzak
