#pragma once

#include <cstdint>
#include <random>

#include "gkdist/normal.hpp"

namespace gkdist {

// Deterministic random source. Normal draws go through the AS241 quantile
// (inversion) so every consumer of this class produces identical streams on
// any platform for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix(mix(seed))) {}

    std::uint64_t next() { return engine_(); }

    // Uniform draw strictly inside (0,1) with full 53-bit resolution.
    double uniform() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal() { return norm_quantile(uniform()); }

    // Uniform index in [0, n); n must be positive.
    std::size_t uniform_index(std::size_t n) {
        const std::uint64_t bound = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do { x = next(); } while (x >= limit);
        return static_cast<std::size_t>(x % bound);
    }

    // Substream derived from (seed, stream_id); independent of the order in
    // which substreams are consumed.
    static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
        return Rng(mix(seed + 0x9e3779b97f4a7c15ULL * (stream_id + 1)));
    }

private:
    static std::uint64_t mix(std::uint64_t x) { // splitmix64 finalizer
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
};

} // namespace gkdist
