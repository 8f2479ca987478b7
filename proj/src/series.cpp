#include "casimir/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace casimir::series {

void SeriesTailPlan::validate() const {
    if (richardson_order < 1 || explicit_terms <= richardson_order) {
        throw std::invalid_argument("SeriesTailPlan: need explicit_terms > richardson_order >= 1");
    }
    if (!(tolerance > 0.0)) {
        throw std::invalid_argument("SeriesTailPlan: tolerance must be positive");
    }
}

namespace {

struct Neumaier {
    double sum = 0.0;
    double carry = 0.0;

    void add(double term) {
        if (!std::isfinite(term)) {
            throw NonFiniteTerm("compensated_sum: non-finite term " + std::to_string(term));
        }
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term)) {
            carry += (sum - t) + term;
        } else {
            carry += (term - t) + sum;
        }
        sum = t;
    }

    [[nodiscard]] double value() const { return sum + carry; }
};

}  // namespace

double compensated_sum(std::span<const double> terms) {
    Neumaier acc;
    for (double t : terms) {
        acc.add(t);
    }
    return acc.value();
}

std::vector<double> compensated_prefix_sums(std::span<const double> terms) {
    std::vector<double> out;
    out.reserve(terms.size());
    Neumaier acc;
    for (double t : terms) {
        acc.add(t);
        out.push_back(acc.value());
    }
    return out;
}

std::vector<double> richardson_table(const PartialSumSequence& sums, int order) {
    if (order < 0) {
        throw std::invalid_argument("richardson_table: order must be non-negative");
    }
    const std::size_t window = static_cast<std::size_t>(order) + 1;
    if (sums.values.size() < window) {
        throw InsufficientData("richardson_table: need " + std::to_string(window) +
                               " partial sums, got " + std::to_string(sums.values.size()));
    }
    const std::size_t offset = sums.values.size() - window;
    std::vector<double> h(window);
    std::vector<double> t(window);
    for (std::size_t i = 0; i < window; ++i) {
        h[i] = 1.0 / sums.count(offset + i);
        t[i] = sums.values[offset + i];
    }
    // Neville recursion evaluated at h = 0. After stage m, t[i] interpolates
    // points i..i+m; the last entry therefore uses the newest m+1 sums.
    std::vector<double> diagonal;
    diagonal.reserve(window);
    diagonal.push_back(t[window - 1]);
    for (std::size_t m = 1; m < window; ++m) {
        for (std::size_t i = 0; i + m < window; ++i) {
            t[i] = t[i + 1] + (t[i + 1] - t[i]) * h[i + m] / (h[i] - h[i + m]);
        }
        diagonal.push_back(t[window - 1 - m]);
    }
    return diagonal;
}

RichardsonResult richardson_limit(const PartialSumSequence& sums, const SeriesTailPlan& plan) {
    if (plan.richardson_order < 1) {
        throw std::invalid_argument("richardson_limit: order must be >= 1");
    }
    const auto diagonal = richardson_table(sums, plan.richardson_order);
    const double last = diagonal.back();
    const double previous = diagonal[diagonal.size() - 2];

    // Rounding in the inputs is amplified by the sum of |Lagrange weights| at h = 0.
    const std::size_t window = static_cast<std::size_t>(plan.richardson_order) + 1;
    const std::size_t offset = sums.values.size() - window;
    double lebesgue = 0.0;
    double largest = 0.0;
    for (std::size_t i = 0; i < window; ++i) {
        const double hi = 1.0 / sums.count(offset + i);
        double weight = 1.0;
        for (std::size_t j = 0; j < window; ++j) {
            if (j != i) {
                const double hj = 1.0 / sums.count(offset + j);
                weight *= hj / (hj - hi);
            }
        }
        lebesgue += std::abs(weight);
        largest = std::max(largest, std::abs(sums.values[offset + i]));
    }
    const double rounding = lebesgue * std::numeric_limits<double>::epsilon() * largest;
    return {last, std::abs(last - previous) + rounding};
}

}  // namespace casimir::series
