#pragma once
#include <complex>
#include <functional>
#include <vector>

#include "qzak/fft.hpp"

namespace qzak {

// Periodic collocation grid on [0, L) with N equispaced nodes.  Fourier
// coefficients are stored in FFTW layout: index j holds wavenumber
// k = j for j < N/2 and k = j - N otherwise, i.e. xi_j = 2*pi*k/L with
// k in {-N/2, ..., N/2-1}.
struct SpectralGrid {
    int n = 0;
    double length = 0.0;
    std::vector<double> xi;   // signed wavenumbers, FFTW order
    int dealias_keep = 0;     // modes with |k| <= dealias_keep survive quadratic products

    double dx() const { return length / n; }
    double node(int m) const { return length * m / n; }
    int mode_index(int k) const { return k >= 0 ? k : k + n; }  // wavenumber -> storage index
    int wavenumber(int j) const { return j < n / 2 ? j : j - n; }
    int nyquist_index() const { return n / 2; }
};

SpectralGrid make_grid(int n, double length);

// A field is its coefficient vector on some grid (complex in general;
// real-valued fields are conjugate-symmetric coefficient vectors).
struct FourierField {
    std::vector<cplx> c;

    int size() const { return static_cast<int>(c.size()); }
    FourierField() = default;
    explicit FourierField(int n) : c(n, cplx(0.0, 0.0)) {}
};

FourierField field_from_physical(const SpectralGrid& g, const std::vector<cplx>& phys);
std::vector<cplx> to_physical(const SpectralGrid& g, const FourierField& f);

// Sample a closed-form profile at the collocation nodes.
FourierField field_from_function(const SpectralGrid& g, const std::function<cplx(double)>& fn);

// 2/3-rule: zero all modes with |k| > dealias_keep (in place).
void apply_dealias(const SpectralGrid& g, FourierField& f);

// Pointwise product computed in physical space with both inputs and the output
// truncated by the 2/3 rule, so the retained band is alias-free.
FourierField dealiased_product(const SpectralGrid& g, const FourierField& a, const FourierField& b);

// |E|^2 as a real field (conjugate-symmetric coefficients), dealiased.
FourierField dealiased_modulus_squared(const SpectralGrid& g, const FourierField& e);

bool is_conjugate_symmetric(const SpectralGrid& g, const FourierField& f, double tol);
void make_conjugate_symmetric(const SpectralGrid& g, FourierField& f);

double linf_coefficient_distance(const FourierField& a, const FourierField& b);
double l2_distance(const SpectralGrid& g, const FourierField& a, const FourierField& b);

} // namespace qzak
