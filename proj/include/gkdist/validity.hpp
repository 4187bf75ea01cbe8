#pragma once

#include <vector>

#include "gkdist/params.hpp"

namespace gkdist {

enum class TheoreticalValidity { Valid, Invalid, Unknown };

enum class ValidityStatus {
    ValidTheoretical,
    InvalidTheoretical,
    ValidNumerical,
    InvalidNumerical,
};

inline bool is_valid_status(ValidityStatus s) {
    return s == ValidityStatus::ValidTheoretical || s == ValidityStatus::ValidNumerical;
}

// Verdict of the numerical validity test. min_r / argmin_z describe the
// smallest located value of R; they are NaN when theory already decided.
struct ValidityVerdict {
    ValidityStatus status;
    double min_r;
    double argmin_z;
};

// Decisions available without touching the numerics. Negative c is first
// mapped through the (g, c) -> (-g, -c) symmetry. Invalid when h < 0,
// k < -1/2, or c > 1 with g != 0; valid when kh >= 0 and 0 <= c < c*;
// everything else (notably gk with -1/2 <= k < 0, and c >= c*) is Unknown.
TheoreticalValidity theoretical_validity(const QdParams& p);

// Numerical validity: minimises R(z) from each starting point (after a
// coarse grid pre-pass whose argmin seeds an extra start) and reports
// whether every located minimum is positive. Short-circuits through
// theoretical_validity. False positives are possible (a missed dip), false
// negatives are not: located minima are genuine values of R.
ValidityVerdict is_valid(const QdParams& p,
                         const std::vector<double>& initial_z = {-2, -1, 0, 1, 2});

// The asymmetry-constant threshold c*: the smallest positive c for which
// R can reach zero when kh >= 0, obtained by minimising
// (u sech^2 u + tanh u)^{-1} over u in (0, u_max].
double compute_c_star(double u_max = 20.0, double tol = 1e-10);

// compute_c_star with defaults, evaluated once and cached.
double c_star();

// Practical lower bound on k for the gk family at c = 0.8:
// max(-0.5, -0.045 - 0.01 g^2). Parameters with k at or above this floor
// sit inside the numerically valid region.
double safe_k_floor(double g);

} // namespace gkdist
