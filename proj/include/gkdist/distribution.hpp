#pragma once

#include <cstdint>
#include <vector>

#include "gkdist/params.hpp"
#include "gkdist/rng.hpp"

namespace gkdist {

// Quantile function F^{-1}(u) = Q(z(u)). u = 0 or 1 yield -inf / +inf.
// Strictly increasing in u whenever the parameters are valid; no validity
// check is performed here.
double quantile(double u, const QdParams& p);

// n IID draws by pushing standard normal draws through the Q transform.
std::vector<double> sample(std::size_t n, const QdParams& p, std::uint64_t seed);
std::vector<double> sample(std::size_t n, const QdParams& p, Rng& rng);

// Result of the cdf root solve. `z` is the root of Q(z) = x, `u` is Phi(z).
// `saturated` is set when the root lies beyond the bracketing cap (|z| > 50):
// u is then pinned to 0/1 and z to the signed cap.
struct CdfResult {
    double u;
    double z;
    bool saturated;
};

// Full cdf evaluation; exposes the z-scale value for tail-accurate work.
CdfResult cdf_eval(double x, const QdParams& p);

// Convenience u-scale / z-scale accessors.
double cdf(double x, const QdParams& p);
double cdf_zscale(double x, const QdParams& p);

// Density f(x) = phi(z) / Q'(z) at z = Q^{-1}(x). The log version works in
// log space throughout so tail densities do not underflow. Throws
// invalid_parameter_error if Q'(z) <= 0 at the root.
double pdf(double x, const QdParams& p);
double log_pdf(double x, const QdParams& p);

} // namespace gkdist
