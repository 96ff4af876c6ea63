#pragma once
#include <complex>
#include <vector>

namespace qzak {

using cplx = std::complex<double>;

// Unnormalized complex DFTs backed by FFTW (plans cached per size, guarded by a
// mutex; execution itself is thread-safe on distinct buffers).
void dft_forward(const std::vector<cplx>& in, std::vector<cplx>& out);   // sum e^{-i2pi jk/N}
void dft_backward(const std::vector<cplx>& in, std::vector<cplx>& out);  // sum e^{+i2pi jk/N}

} // namespace qzak
