#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace aedet {

// splitmix64; used to derive independent sub-seeds from one campaign seed.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Deterministic standard-normal stream.
///
/// std::normal_distribution is implementation-defined, so the Box-Muller
/// transform is spelled out here: identical bytes for a given seed on any
/// conforming platform.
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // uniforms in (0,1]: (x >> 11) has 53 bits, +1 avoids log(0)
        const double u1 = ((rng_() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = (rng_() >> 11) * 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace aedet
