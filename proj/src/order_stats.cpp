#include "gkdist/order_stats.hpp"

#include <cmath>
#include <stdexcept>

#include "gkdist/distribution.hpp"
#include "gkdist/errors.hpp"
#include "gkdist/normal.hpp"

namespace gkdist {

namespace {

// Gamma(shape, 1) draw, shape >= 1. Marsaglia-Tsang squeeze; for shape 1 it
// degenerates to a plain exponential.
double gamma_draw(double shape, Rng& rng) {
    if (shape == 1.0) return -std::log(rng.uniform());
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = rng.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

} // namespace

void OrderIndexSet::validate() const {
    if (n < 1) throw std::domain_error("OrderIndexSet: n must be at least 1");
    if (indices.empty()) throw std::domain_error("OrderIndexSet: no indices requested");
    std::size_t prev = 0;
    for (std::size_t idx : indices) {
        if (idx <= prev || idx > n)
            throw std::domain_error(
                "OrderIndexSet: indices must be strictly increasing and within [1, n]");
        prev = idx;
    }
}

std::vector<double> uniform_orderstats(const OrderIndexSet& set, Rng& rng) {
    set.validate();
    // U_(i) = S_i / S_{n+1} where S_i is the i-th partial sum of n+1 IID
    // exponentials; gaps between requested indices collapse into Gamma draws.
    std::vector<double> partial(set.indices.size());
    double sum = 0.0;
    std::size_t prev = 0;
    for (std::size_t j = 0; j < set.indices.size(); ++j) {
        sum += gamma_draw(static_cast<double>(set.indices[j] - prev), rng);
        partial[j] = sum;
        prev = set.indices[j];
    }
    sum += gamma_draw(static_cast<double>(set.n + 1 - prev), rng);
    for (auto& v : partial) v /= sum;
    return partial;
}

std::vector<double> uniform_orderstats(const OrderIndexSet& set, std::uint64_t seed) {
    Rng rng(seed);
    return uniform_orderstats(set, rng);
}

std::array<std::size_t, 7> octile_indices(std::size_t n) {
    std::array<std::size_t, 7> idx{};
    for (std::size_t i = 1; i <= 7; ++i) {
        // round half away from zero, clamped to [1, n]
        long long r = std::llround(static_cast<double>(i) * static_cast<double>(n) / 8.0);
        if (r < 1) r = 1;
        if (r > static_cast<long long>(n)) r = static_cast<long long>(n);
        idx[i - 1] = static_cast<std::size_t>(r);
    }
    return idx;
}

Octiles simulate_octiles(const QdParams& p, std::size_t n, Rng& rng) {
    p.validate();
    if (n < 8) throw std::domain_error("simulate_octiles: n must be at least 8");
    const auto idx = octile_indices(n);
    OrderIndexSet set{n, {idx.begin(), idx.end()}};
    const auto u = uniform_orderstats(set, rng);
    Octiles oct{};
    for (std::size_t i = 0; i < 7; ++i) oct.e[i] = quantile(u[i], p);
    for (std::size_t i = 1; i < 7; ++i)
        if (oct.e[i] < oct.e[i - 1])
            throw invalid_parameter_error(
                "simulate_octiles: quantile function is not increasing here");
    return oct;
}

Octiles simulate_octiles(const QdParams& p, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return simulate_octiles(p, n, rng);
}

std::array<double, 4> moment_summaries(const Octiles& oct) {
    const auto& e = oct.e;
    const double s_a = e[3];
    const double s_b = e[5] - e[1];
    if (s_b == 0.0)
        throw degenerate_summary_error("moment_summaries: zero spread (E6 == E2)");
    const double s_g = (e[5] + e[1] - 2.0 * e[3]) / s_b;
    const double s_k = (e[6] - e[4] + e[2] - e[0]) / s_b;
    return {s_a, s_b, s_g, s_k};
}

} // namespace gkdist
