#include "gkdist/transforms.hpp"

#include <cmath>
#include <stdexcept>

#include "gkdist/errors.hpp"

namespace gkdist {

namespace {

void check_input(double z, const QdParams& p) {
    if (!std::isfinite(z))
        throw std::domain_error("z must be finite");
    p.validate();
}

inline double skew_factor(double z, const QdParams& p) {
    return 1.0 + p.c * std::tanh(0.5 * p.g * z);
}

} // namespace

double z2q(double z, const QdParams& p) {
    check_input(z, p);
    const double zz = z * z;
    const double tail = (p.family == Family::gk) ? std::pow(1.0 + zz, p.kh)
                                                 : std::exp(0.5 * p.kh * zz);
    return p.loc + p.scale * skew_factor(z, p) * z * tail;
}

double r_func(double z, const QdParams& p) {
    check_input(z, p);
    const double zz = z * z;
    // cosh overflows near |gz/2| ~ 710; the term limits to zero there.
    const double ch = std::cosh(0.5 * p.g * z);
    double swing = p.c * p.g * z / (2.0 * ch * ch);
    if (!std::isfinite(swing)) swing = 0.0;
    const double skew = skew_factor(z, p);
    if (p.family == Family::gk)
        return skew * (1.0 + (2.0 * p.kh + 1.0) * zz) / (1.0 + zz) + swing;
    return skew * (1.0 + p.kh * zz) + swing;
}

double q_deriv(double z, const QdParams& p) {
    const double r = r_func(z, p);
    const double zz = z * z;
    const double tail = (p.family == Family::gk) ? std::pow(1.0 + zz, p.kh)
                                                 : std::exp(0.5 * p.kh * zz);
    return p.scale * tail * r;
}

double log_q_deriv(double z, const QdParams& p) {
    const double r = r_func(z, p);
    if (!(r > 0.0))
        throw invalid_parameter_error("log_q_deriv: non-positive quantile derivative");
    const double zz = z * z;
    const double log_tail = (p.family == Family::gk) ? p.kh * std::log1p(zz)
                                                     : 0.5 * p.kh * zz;
    return std::log(p.scale) + log_tail + std::log(r);
}

} // namespace gkdist
