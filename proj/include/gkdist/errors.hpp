#pragma once

#include <stdexcept>
#include <string>

namespace gkdist {

// Failure of a numerical procedure (root finder, optimizer) rather than a
// bad argument. CLI maps these to a distinct exit status.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Parameter values outside the region where the quantile function is
// strictly increasing, detected mid-computation (e.g. Q'(z) <= 0).
class invalid_parameter_error : public numeric_error {
public:
    explicit invalid_parameter_error(const std::string& what) : numeric_error(what) {}
};

// Summary statistics that carry no information (zero spread), e.g. the
// moment estimates of a constant sample.
class degenerate_summary_error : public numeric_error {
public:
    explicit degenerate_summary_error(const std::string& what) : numeric_error(what) {}
};

} // namespace gkdist
