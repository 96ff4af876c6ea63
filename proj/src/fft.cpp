#include "qzak/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace qzak {

namespace {

std::mutex plan_mutex;

fftw_plan get_plan(int n, int sign) {
    // FFTW plan creation is not thread-safe; execution via fftw_execute_dft is.
    // FFTW_UNALIGNED lets us execute on arbitrary std::vector storage.
    static std::map<std::pair<int, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_pair(n, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<cplx> a(n), b(n);
    fftw_plan p = fftw_plan_dft_1d(n,
                                   reinterpret_cast<fftw_complex*>(a.data()),
                                   reinterpret_cast<fftw_complex*>(b.data()),
                                   sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache[key] = p;
    return p;
}

void run(const std::vector<cplx>& in, std::vector<cplx>& out, int sign) {
    const int n = static_cast<int>(in.size());
    if (n == 0) throw std::invalid_argument("dft: empty input");
    out.resize(n);
    fftw_plan p = get_plan(n, sign);
    // in is not modified for an out-of-place c2c plan
    fftw_execute_dft(p,
                     reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data())),
                     reinterpret_cast<fftw_complex*>(out.data()));
}

} // namespace

void dft_forward(const std::vector<cplx>& in, std::vector<cplx>& out) { run(in, out, FFTW_FORWARD); }
void dft_backward(const std::vector<cplx>& in, std::vector<cplx>& out) { run(in, out, FFTW_BACKWARD); }

} // namespace qzak
