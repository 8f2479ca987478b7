#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace casimir::series {

class NonFiniteTerm : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class InsufficientData : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Explicit-sum plus Richardson-tail procedure for slowly convergent sums.
struct SeriesTailPlan {
    int explicit_terms = 50;
    int richardson_order = 4;
    double tolerance = 1e-5;

    /// Throws std::invalid_argument unless explicit_terms > richardson_order >= 1
    /// and tolerance > 0.
    void validate() const;
};

/// Neumaier-compensated sum in input order. Throws NonFiniteTerm on NaN/inf.
double compensated_sum(std::span<const double> terms);

/// Running compensated sums: out[i] = terms[0] + ... + terms[i].
std::vector<double> compensated_prefix_sums(std::span<const double> terms);

/// Partial sums S_N sampled at N = first_count + i * stride.
struct PartialSumSequence {
    std::size_t first_count = 1;
    std::size_t stride = 1;
    std::vector<double> values;

    [[nodiscard]] double count(std::size_t i) const {
        return static_cast<double>(first_count + i * stride);
    }
};

struct RichardsonResult {
    double limit;
    double error_estimate;
};

/// Extrapolates S_N to N -> infinity by fitting a polynomial in 1/N of degree
/// plan.richardson_order through the trailing order+1 partial sums.
/// error_estimate is |T_order - T_{order-1}| where T_k uses the last k+1 sums,
/// plus the input rounding (machine epsilon times the largest sum) scaled by
/// the Lebesgue constant of the extrapolation weights.
RichardsonResult richardson_limit(const PartialSumSequence& sums, const SeriesTailPlan& plan);

/// Diagonal of the Neville table on the trailing window: entry k is the
/// degree-k extrapolation through the last k+1 partial sums.
std::vector<double> richardson_table(const PartialSumSequence& sums, int order);

}  // namespace casimir::series
