#include "casimir/sphere.hpp"

#include <cmath>
#include <numbers>
#include <span>
#include <string>

namespace casimir::sphere {

namespace {

constexpr double kPi = std::numbers::pi;
const double kGenericPrefactor = 15.0 * std::numbers::sqrt2 / 256.0;

double pow4(double n) {
    const double n2 = n * n;
    return n2 * n2;
}

}  // namespace

double sphere_diameter_term(int n) {
    if (n < 1) {
        throw std::domain_error("sphere_diameter_term: n must be >= 1");
    }
    return 1.0 / (16.0 * kPi * pow4(n));
}

double sphere_diameter_sum() {
    return kPi * kPi * kPi / 1440.0;
}

double sphere_generic_term(int n) {
    if (n < 1) {
        throw std::domain_error("sphere_generic_term: n must be >= 1");
    }
    std::vector<double> inner;
    inner.reserve(static_cast<std::size_t>(n));
    for (int w = 1; w < n; ++w) {
        const double angle = w * kPi / (2.0 * n);
        const double s = std::sin(angle);
        inner.push_back(std::cos(angle) / (s * s));
    }
    return kGenericPrefactor / pow4(n) * series::compensated_sum(inner);
}

SphereEnergyBreakdown sphere_sce(const series::SeriesTailPlan& plan) {
    plan.validate();
    const int terms = plan.explicit_terms;
    std::vector<double> generic(static_cast<std::size_t>(terms));
    for (int n = 1; n <= terms; ++n) {
        generic[n - 1] = sphere_generic_term(n);
    }
    // Offsets S_count - S_terms, summed from the terms.
    const double explicit_sum = series::compensated_sum(generic);
    series::PartialSumSequence offsets{1, 1, {}};
    for (std::size_t count = 1; count <= generic.size(); ++count) {
        const std::span<const double> rest(generic.data() + count, generic.size() - count);
        offsets.values.push_back(rest.empty() ? 0.0 : -series::compensated_sum(rest));
    }
    auto tail = series::richardson_limit(offsets, plan);
    tail.limit += explicit_sum;
    if (tail.error_estimate > plan.tolerance) {
        throw ToleranceNotMet("sphere_sce: tail estimate " + std::to_string(tail.error_estimate) +
                              " exceeds tolerance " + std::to_string(plan.tolerance));
    }
    const double diameter = sphere_diameter_sum();
    return SphereEnergyBreakdown{
        .diameter_sum = diameter,
        .generic_sum = tail.limit,
        .total = diameter + tail.limit,
        .tail_error = tail.error_estimate,
        .explicit_terms_used = terms,
        .explicit_generic_sum = explicit_sum,
    };
}

std::vector<SphereTermRow> sphere_term_rows(int n_max) {
    std::vector<SphereTermRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        rows.push_back({n, sphere_diameter_term(n), sphere_generic_term(n)});
    }
    return rows;
}

}  // namespace casimir::sphere
