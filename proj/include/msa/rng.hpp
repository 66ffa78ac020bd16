#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>

#include "msa/matrix.hpp"

namespace msa {

// Seed derivation is part of the reproducibility contract: independent streams
// are derived from (root seed, stream labels) through splitmix64 so that traces
// do not depend on execution order.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t state = 0x8f1bbcdcbfa53e0bull;
    std::uint64_t out = 0;
    for (std::uint64_t p : parts) {
        state ^= p;
        out = splitmix64(state);
    }
    return out;
}

// Deterministic random source. The generator identity is pinned: mt19937_64
// seeded directly (state evolution is fixed by the C++ standard), uniforms via
// the top 53 bits, Gaussians via the Marsaglia polar transform. No
// distribution from <random> is used, so streams are bit-reproducible across
// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal via Marsaglia's polar method.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

    // Row-major fill order is pinned; it is part of the data-generation contract.
    Matrix gaussian_matrix(std::size_t rows, std::size_t cols) {
        Matrix out(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) out(i, j) = gaussian();
        return out;
    }

    Vector gaussian_vector(std::size_t n) {
        Vector out(n);
        for (double& v : out) v = gaussian();
        return out;
    }

    // Integer in [0, bound) by rejection; unbiased.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace msa
