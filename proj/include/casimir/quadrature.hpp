#pragma once

#include <functional>
#include <stdexcept>

namespace casimir::quadrature {

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Result {
    double value;
    double error_estimate;
    int intervals;
};

/// Globally adaptive 7/15-point Gauss-Kronrod integration on [a, b].
///
/// Splits the interval with the largest error estimate until the summed
/// estimate drops below max(abs_tol, rel_tol * |I|). Throws
/// ConvergenceError if the interval budget is exhausted first.
Result gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-13, double rel_tol = 1e-13, int max_intervals = 2000);

}  // namespace casimir::quadrature
