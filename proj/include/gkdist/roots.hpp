#pragma once

#include <functional>

namespace gkdist {

// Brent root refinement on a bracketing interval [a, b] with f(a), f(b) of
// opposite sign. Stops when |f| <= f_tol or the interval shrinks below
// x_tol (plus a machine-precision floor). Throws numeric_error if the
// bracket is bad or the iteration cap is hit.
double brent_root(const std::function<double(double)>& f, double a, double b,
                  double f_tol, double x_tol);

struct ScalarMinimum {
    double x;
    double value;
};

// Brent parabolic/golden-section minimization on [a, b]; assumes f is
// continuous. Converges to a local minimum within x_tol.
ScalarMinimum brent_minimize(const std::function<double(double)>& f, double a,
                             double b, double x_tol);

// Downhill bracketing: starting from points a < b, expands until a triple
// a < m < b with f(m) <= f(a) and f(m) <= f(b) is found. Expansion stops at
// max_span from the starting point, in which case the returned triple simply
// covers the searched range (its midpoint need not be a true bracket).
struct Bracket {
    double a, m, b;
};
Bracket bracket_minimum(const std::function<double(double)>& f, double a,
                        double b, double max_span);

} // namespace gkdist
