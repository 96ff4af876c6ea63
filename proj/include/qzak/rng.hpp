#pragma once
#include <cstdint>

namespace qzak {

// Counter-based generator: every draw is a pure function of (seed, stream, counter),
// so parallel consumers can pull from disjoint streams without sharing state and a
// run is reproducible from the manifest seed alone.
class CounterRng {
public:
    CounterRng(uint64_t seed, uint64_t stream) : seed_(seed), stream_(stream), counter_(0) {}

    uint64_t next_u64() { return mix(seed_, stream_, counter_++); }

    // uniform in [0,1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in [lo,hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    static uint64_t mix(uint64_t seed, uint64_t stream, uint64_t counter) {
        // splitmix64 finalizer applied to a seed/stream/counter blend
        uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1) + 0xbf58476d1ce4e5b9ULL * counter;
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    uint64_t seed_;
    uint64_t stream_;
    uint64_t counter_;
};

} // namespace qzak
