#pragma once

#include "gkdist/params.hpp"

namespace gkdist {

// The Q transform: the value at z of the quantile function composed with the
// normal quantile, Q(z) = A + B * (1 + c*tanh(gz/2)) * z * T(z) where the
// tail factor T is (1+z^2)^k or exp(h z^2 / 2).
double z2q(double z, const QdParams& p);

// First derivative Q'(z).
double q_deriv(double z, const QdParams& p);

// The factor R(z) with the same sign and roots as Q'(z); Q'(z) equals
// B*(1+z^2)^k * R(z) (gk) or B*exp(h z^2/2) * R(z) (gh). Minimising R is how
// parameter validity is tested.
double r_func(double z, const QdParams& p);

// log Q'(z) computed without forming Q' itself, so the gh tail factor cannot
// overflow. Throws invalid_parameter_error when R(z) <= 0.
double log_q_deriv(double z, const QdParams& p);

} // namespace gkdist
