#include "gkdist/roots.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "gkdist/errors.hpp"

namespace gkdist {

namespace {
constexpr int kMaxIter = 200;
constexpr double kEps = std::numeric_limits<double>::epsilon();
} // namespace

// Classic Brent: bisection fallback with secant / inverse quadratic steps.
double brent_root(const std::function<double(double)>& f, double a, double b,
                  double f_tol, double x_tol) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw numeric_error("brent_root: endpoints do not bracket a root");

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < kMaxIter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a; fc = fa;
            d = b - a; e = d;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * kEps * std::fabs(b) + 0.5 * x_tol;
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || std::fabs(fb) <= f_tol) return b;

        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) { // secant
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else { // inverse quadratic interpolation
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            if (std::isfinite(p) && std::isfinite(q) &&
                2.0 * p < std::fmin(3.0 * xm * q - std::fabs(tol1 * q),
                                    std::fabs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::fabs(d) > tol1) ? d : std::copysign(tol1, xm);
        fb = f(b);
        if (fb == 0.0) return b;
    }
    throw numeric_error("brent_root: iteration cap exceeded");
}

ScalarMinimum brent_minimize(const std::function<double(double)>& f, double a,
                             double b, double x_tol) {
    constexpr double kGold = 0.3819660112501051; // 2 - golden ratio
    if (a > b) std::swap(a, b);
    double x = a + kGold * (b - a);
    double w = x, v = x;
    double fx = f(x), fw = fx, fv = fx;
    double d = 0.0, e = 0.0;

    for (int iter = 0; iter < kMaxIter; ++iter) {
        const double xm = 0.5 * (a + b);
        const double tol1 = x_tol * std::fabs(x) + kEps + x_tol;
        const double tol2 = 2.0 * tol1;
        if (std::fabs(x - xm) <= tol2 - 0.5 * (b - a))
            return {x, fx};

        bool golden = true;
        if (std::fabs(e) > tol1) {
            // parabolic fit through x, v, w
            const double r = (x - w) * (fx - fv);
            double q = (x - v) * (fx - fw);
            double p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0) p = -p;
            q = std::fabs(q);
            const double e_prev = e;
            e = d;
            if (std::fabs(p) < std::fabs(0.5 * q * e_prev) && p > q * (a - x) &&
                p < q * (b - x)) {
                d = p / q;
                const double u = x + d;
                if (u - a < tol2 || b - u < tol2) d = std::copysign(tol1, xm - x);
                golden = false;
            }
        }
        if (golden) {
            e = (x >= xm) ? a - x : b - x;
            d = kGold * e;
        }
        const double u = (std::fabs(d) >= tol1) ? x + d : x + std::copysign(tol1, d);
        const double fu = f(u);
        if (fu <= fx) {
            if (u >= x) a = x; else b = x;
            v = w; fv = fw;
            w = x; fw = fx;
            x = u; fx = fu;
        } else {
            if (u < x) a = u; else b = u;
            if (fu <= fw || w == x) {
                v = w; fv = fw;
                w = u; fw = fu;
            } else if (fu <= fv || v == x || v == w) {
                v = u; fv = fu;
            }
        }
    }
    throw numeric_error("brent_minimize: iteration cap exceeded");
}

Bracket bracket_minimum(const std::function<double(double)>& f, double a,
                        double b, double max_span) {
    constexpr double kGrow = 1.618033988749895;
    double fa = f(a);
    double fb = f(b);
    if (fb > fa) { // walk downhill
        std::swap(a, b);
        std::swap(fa, fb);
    }
    double c = b + kGrow * (b - a);
    double fc = f(c);
    const double origin = a;
    while (fc < fb) {
        if (std::fabs(c - origin) > max_span)
            return {std::fmin(a, c), b, std::fmax(a, c)};
        a = b; fa = fb;
        b = c; fb = fc;
        c = b + kGrow * (b - a);
        fc = f(c);
    }
    (void)fa;
    return {std::fmin(a, c), b, std::fmax(a, c)};
}

} // namespace gkdist
