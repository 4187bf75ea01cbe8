#include "gkdist/validity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gkdist/roots.hpp"
#include "gkdist/transforms.hpp"

namespace gkdist {

namespace {
constexpr double kGridLo = -10.0;
constexpr double kGridHi = 10.0;
constexpr double kGridStep = 0.05;
constexpr double kBracketSpan = 1e6;
constexpr double kMinTol = 1e-10;
} // namespace

TheoreticalValidity theoretical_validity(const QdParams& p) {
    p.validate();
    // c < 0 is the mirror image of (-g, -c).
    const double c = std::fabs(p.c);
    const double g = (p.c < 0.0) ? -p.g : p.g;

    if (p.family == Family::gh && p.kh < 0.0) return TheoreticalValidity::Invalid;
    if (p.family == Family::gk && p.kh < -0.5) return TheoreticalValidity::Invalid;
    if (c > 1.0 && g != 0.0) return TheoreticalValidity::Invalid;
    if (p.kh >= 0.0 && c < c_star()) return TheoreticalValidity::Valid;
    return TheoreticalValidity::Unknown;
}

ValidityVerdict is_valid(const QdParams& p, const std::vector<double>& initial_z) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    switch (theoretical_validity(p)) {
        case TheoreticalValidity::Valid:
            return {ValidityStatus::ValidTheoretical, nan, nan};
        case TheoreticalValidity::Invalid:
            return {ValidityStatus::InvalidTheoretical, nan, nan};
        case TheoreticalValidity::Unknown:
            break;
    }
    if (initial_z.empty())
        throw std::domain_error("is_valid: initial_z must be non-empty");

    const auto r = [&](double z) { return r_func(z, p); };

    // Coarse pre-pass; its argmin becomes an extra optimizer start.
    double best = std::numeric_limits<double>::infinity();
    double best_z = 0.0;
    for (double z = kGridLo; z <= kGridHi + 0.5 * kGridStep; z += kGridStep) {
        const double v = r(z);
        if (v < best) {
            best = v;
            best_z = z;
        }
    }

    std::vector<double> starts = initial_z;
    starts.push_back(best_z);
    for (double s : starts) {
        const Bracket br = bracket_minimum(r, s, s + 0.25, kBracketSpan);
        const ScalarMinimum m = brent_minimize(r, br.a, br.b, kMinTol);
        if (m.value < best) {
            best = m.value;
            best_z = m.x;
        }
    }
    const auto status = best > 0.0 ? ValidityStatus::ValidNumerical
                                   : ValidityStatus::InvalidNumerical;
    return {status, best, best_z};
}

double compute_c_star(double u_max, double tol) {
    if (!(u_max > 0.0) || !(tol > 0.0))
        throw std::domain_error("compute_c_star: u_max and tol must be positive");
    // 1/c at the zero-crossing of R with the tail factor at its sup (v = 1).
    const auto inv_c = [](double u) {
        const double sech = 1.0 / std::cosh(u);
        return 1.0 / (u * sech * sech + std::tanh(u));
    };
    const double lo = std::fmin(1e-12, 0.5 * u_max);
    return brent_minimize(inv_c, lo, u_max, tol).value;
}

double c_star() {
    static const double value = compute_c_star();
    return value;
}

double safe_k_floor(double g) {
    if (!std::isfinite(g)) throw std::domain_error("safe_k_floor: g must be finite");
    return std::fmax(-0.5, -0.045 - 0.01 * g * g);
}

} // namespace gkdist
