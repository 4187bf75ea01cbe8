#include "gkdist/distribution.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gkdist/errors.hpp"
#include "gkdist/normal.hpp"
#include "gkdist/roots.hpp"
#include "gkdist/transforms.hpp"

namespace gkdist {

namespace {

constexpr double kZCap = 50.0;         // beyond this the cdf saturates
constexpr double kInitialHalfWidth = 5.0;
constexpr double kFClamp = 1e150;      // keeps Brent arithmetic finite

// Q(z) - x, clamped so gh tail overflow cannot poison the root finder.
double residual(double z, const QdParams& p, double x) {
    const double r = z2q(z, p) - x;
    if (std::isnan(r))
        throw numeric_error("cdf: quantile transform returned NaN");
    return std::fmax(-kFClamp, std::fmin(kFClamp, r));
}

} // namespace

double quantile(double u, const QdParams& p) {
    p.validate();
    if (std::isnan(u) || u < 0.0 || u > 1.0)
        throw std::domain_error("quantile: u must lie in [0,1]");
    if (u == 0.0) return -std::numeric_limits<double>::infinity();
    if (u == 1.0) return std::numeric_limits<double>::infinity();
    return z2q(norm_quantile(u), p);
}

std::vector<double> sample(std::size_t n, const QdParams& p, Rng& rng) {
    p.validate();
    std::vector<double> out(n);
    for (auto& x : out) x = z2q(rng.normal(), p);
    return out;
}

std::vector<double> sample(std::size_t n, const QdParams& p, std::uint64_t seed) {
    Rng rng(seed);
    return sample(n, p, rng);
}

CdfResult cdf_eval(double x, const QdParams& p) {
    p.validate();
    if (!std::isfinite(x))
        throw std::domain_error("cdf: x must be finite");

    const auto f = [&](double z) { return residual(z, p, x); };

    // Expand a symmetric bracket until the residual changes sign. Q is
    // increasing for valid parameters, so f(-w) <= 0 <= f(w) once w is wide
    // enough; the expansion is capped at kZCap.
    double w = kInitialHalfWidth;
    double flo = f(-w);
    double fhi = f(w);
    while ((flo > 0.0) == (fhi > 0.0)) {
        if (w >= kZCap) {
            // Entire [-cap, cap] is on one side of x: report a saturated tail.
            const bool upper = flo < 0.0; // Q(cap) still below x
            return {upper ? 1.0 : 0.0, upper ? kZCap : -kZCap, true};
        }
        w = std::fmin(2.0 * w, kZCap);
        flo = f(-w);
        fhi = f(w);
    }

    const double f_tol = 1e-12 * std::fmax(1.0, std::fabs(x));
    const double z = brent_root(f, -w, w, f_tol, 1e-12);
    return {norm_cdf(z), z, false};
}

double cdf(double x, const QdParams& p) { return cdf_eval(x, p).u; }

double cdf_zscale(double x, const QdParams& p) { return cdf_eval(x, p).z; }

double log_pdf(double x, const QdParams& p) {
    const CdfResult r = cdf_eval(x, p);
    return norm_log_pdf(r.z) - log_q_deriv(r.z, p);
}

double pdf(double x, const QdParams& p) {
    return std::exp(log_pdf(x, p));
}

} // namespace gkdist
