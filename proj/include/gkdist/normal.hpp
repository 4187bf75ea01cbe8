#pragma once

// Standard normal primitives. The quantile function needs to be accurate in
// the extreme tails because the rest of the library leans on it for
// inversion sampling and for the z-scale cdf root finding.

namespace gkdist {

// N(0,1) quantile. Wichura's AS241 rational approximation, |relative error|
// below 1e-15 over the full open interval. Returns -inf/+inf at p = 0/1,
// throws std::domain_error outside [0,1].
double norm_quantile(double p);

// N(0,1) cdf via the complementary error function (tail-accurate).
double norm_cdf(double z);

// N(0,1) density and log density.
double norm_pdf(double z);
double norm_log_pdf(double z);

// A (z, u) pair on the standard normal scale with u = Phi(z).
struct NormalPoint {
    double z;
    double u;
};

} // namespace gkdist
