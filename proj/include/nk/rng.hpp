#pragma once

#include <cstdint>
#include <complex>

// Portable deterministic PRNG (splitmix64).  std::uniform_real_distribution
// is implementation-defined, so report reproducibility across toolchains
// requires rolling the mapping by hand.

namespace nk {

struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// zero-mean "gaussian-ish" value; sum of uniforms is plenty for sampling
    double sym(double amp = 1.0) { return amp * (2.0 * uniform() - 1.0); }

    std::complex<double> complex_box(double amp) { return {sym(amp), sym(amp)}; }

    /// uniform on the open disc of radius r
    std::complex<double> complex_disc(double r) {
        for (;;) {
            std::complex<double> z{sym(1.0), sym(1.0)};
            if (std::norm(z) < 1.0) return r * z;
        }
    }
};

}  // namespace nk
