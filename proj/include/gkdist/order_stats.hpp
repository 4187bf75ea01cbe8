#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gkdist/params.hpp"
#include "gkdist/rng.hpp"

namespace gkdist {

// Which order statistics of an n-sample are wanted: 1-based indices,
// strictly increasing, all within [1, n].
struct OrderIndexSet {
    std::size_t n;
    std::vector<std::size_t> indices;

    void validate() const;
};

// The seven octiles E_1..E_7 of a sample, non-decreasing.
struct Octiles {
    std::array<double, 7> e;
};

// Uniform(0,1) order statistics U_(i) for the requested indices, via
// exponential spacings. Spacings between consecutive requested indices are
// aggregated into single Gamma draws, so the cost is proportional to the
// number of requested indices, not to n. Output is strictly increasing.
std::vector<double> uniform_orderstats(const OrderIndexSet& set, Rng& rng);
std::vector<double> uniform_orderstats(const OrderIndexSet& set, std::uint64_t seed);

// The order-statistic indices round(i*n/8), i = 1..7 (half away from zero,
// clamped to [1, n]) used as fast approximate octiles.
std::array<std::size_t, 7> octile_indices(std::size_t n);

// Approximate octiles of an n-sample from the distribution, simulated
// without generating the full sample: uniform order statistics at the octile
// indices pushed through the quantile function. Requires n >= 8.
Octiles simulate_octiles(const QdParams& p, std::size_t n, Rng& rng);
Octiles simulate_octiles(const QdParams& p, std::size_t n, std::uint64_t seed);

// Robust moment estimates (S_A, S_B, S_g, S_k) built from octiles:
// location E4, spread E6-E2, skewness (E6+E2-2*E4)/S_B and tail weight
// (E7-E5+E3-E1)/S_B. Throws degenerate_summary_error when S_B = 0.
std::array<double, 4> moment_summaries(const Octiles& e);

} // namespace gkdist
