#pragma once

#include <cmath>
#include <stdexcept>

namespace gkdist {

// Which quantile family the parameters describe: g-and-k (polynomial tail
// factor) or generalised g-and-h (exponential tail factor).
enum class Family { gk, gh };

// The five-parameter description shared by both families. `kh` is k under
// Family::gk and h under Family::gh. Only the basic well-formedness rules
// are enforced here; whether the resulting quantile function is strictly
// increasing is a separate question answered by the validity module, and the
// distribution functions deliberately do not check it.
struct QdParams {
    Family family = Family::gk;
    double loc = 0.0;   // A
    double scale = 1.0; // B, must be > 0
    double g = 0.0;     // skewness shape
    double kh = 0.0;    // kurtosis shape (k or h)
    double c = 0.8;     // asymmetry constant

    void validate() const {
        if (!(scale > 0.0))
            throw std::domain_error("QdParams: scale must be positive");
        if (!std::isfinite(loc) || !std::isfinite(scale) || !std::isfinite(g) ||
            !std::isfinite(kh) || !std::isfinite(c))
            throw std::domain_error("QdParams: all parameters must be finite");
    }
};

inline QdParams gk_params(double loc, double scale, double g, double k, double c = 0.8) {
    return {Family::gk, loc, scale, g, k, c};
}

inline QdParams gh_params(double loc, double scale, double g, double h, double c = 0.8) {
    return {Family::gh, loc, scale, g, h, c};
}

} // namespace gkdist
