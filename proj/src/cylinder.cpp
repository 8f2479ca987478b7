#include "casimir/cylinder.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "casimir/quadrature.hpp"
#include "casimir/specfun.hpp"

namespace casimir::cylinder {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

}  // namespace

std::string_view to_string(AlphaIntegralVariant variant) {
    switch (variant) {
    case AlphaIntegralVariant::ExactQuadrature:
        return "exact";
    case AlphaIntegralVariant::SemiclassicalQuadratic:
        return "quadratic";
    case AlphaIntegralVariant::ExponentialFit:
        return "expfit";
    case AlphaIntegralVariant::Unbounded:
        return "unbounded";
    }
    return "?";
}

AlphaIntegralVariant parse_variant(std::string_view name) {
    for (auto v : {AlphaIntegralVariant::ExactQuadrature, AlphaIntegralVariant::SemiclassicalQuadratic,
                   AlphaIntegralVariant::ExponentialFit, AlphaIntegralVariant::Unbounded}) {
        if (name == to_string(v)) {
            return v;
        }
    }
    throw std::invalid_argument("unknown alpha-integral variant '" + std::string(name) + "'");
}

double csc2_sum(int n) {
    if (n < 1) {
        throw std::domain_error("csc2_sum: n must be >= 1");
    }
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(n));
    for (int w = 1; w <= n; ++w) {
        const double s = std::sin(w * kPi / (2.0 * n));
        terms.push_back(1.0 / (s * s));
    }
    return series::compensated_sum(terms);
}

double cylinder_n_term(int n) {
    const double nn = static_cast<double>(n) * n;
    const double magnitude = (csc2_sum(n) - 0.5) / (nn * nn);
    return n % 2 == 0 ? magnitude : -magnitude;
}

double cylinder_prefactor() {
    return 15.0 * kSqrt2 / (512.0 * kPi);
}

double alternating_series_closed_form() {
    const double pi2 = kPi * kPi;
    return -pi2 / 18.0 + 7.0 * pi2 * pi2 / 4320.0;
}

double alpha_factor(AlphaIntegralVariant variant) {
    switch (variant) {
    case AlphaIntegralVariant::SemiclassicalQuadratic:
        return 28.0 * kSqrt2 / 15.0;
    case AlphaIntegralVariant::ExponentialFit:
        // Fourth moment of exp(-pi x / 4): (4 / pi)^4.
        return 256.0 / (kPi * kPi * kPi * kPi);
    case AlphaIntegralVariant::Unbounded:
        return 0.0;
    case AlphaIntegralVariant::ExactQuadrature:
        break;
    }
    throw UnsupportedVariant("alpha_factor: the exact alpha integral has no per-sector closed form");
}

double alpha_factor_quadrature() {
    return quadrature::gauss_kronrod([](double a) { return std::pow(1.0 - 0.5 * a * a, -3.5); }, 0.0, 1.0)
        .value;
}

double cylinder_closed_form(AlphaIntegralVariant variant) {
    const double pi2 = kPi * kPi;
    switch (variant) {
    case AlphaIntegralVariant::SemiclassicalQuadratic:
        return 7.0 * kPi * (7.0 * pi2 - 240.0) / 276480.0;
    case AlphaIntegralVariant::ExponentialFit:
        return (7.0 * pi2 - 240.0) / (288.0 * pi2 * kPi * kSqrt2);
    case AlphaIntegralVariant::Unbounded:
        return 0.0;
    case AlphaIntegralVariant::ExactQuadrature:
        break;
    }
    throw UnsupportedVariant("cylinder_closed_form: no closed form for the exact alpha integral");
}

SeriesEstimate cylinder_series(const series::SeriesTailPlan& plan) {
    plan.validate();
    const int terms = plan.explicit_terms;
    if (terms < 2 * plan.richardson_order + 1) {
        throw std::invalid_argument("cylinder_series: need explicit_terms >= 2 * richardson_order + 1");
    }
    std::vector<double> per_n(static_cast<std::size_t>(terms));
    for (int n = 1; n <= terms; ++n) {
        per_n[n - 1] = cylinder_n_term(n);
    }
    // Partial sums enter as offsets S_count - S_terms taken straight from the
    // terms, so their rounding is relative to the offset and not to S.
    const double total = series::compensated_sum(per_n);
    const std::size_t first = terms % 2 == 0 ? 2 : 1;
    series::PartialSumSequence same_parity{first, 2, {}};
    for (std::size_t count = first; count <= static_cast<std::size_t>(terms); count += 2) {
        const std::span<const double> rest(per_n.data() + count, per_n.size() - count);
        same_parity.values.push_back(rest.empty() ? 0.0 : -series::compensated_sum(rest));
    }
    const auto tail = series::richardson_limit(same_parity, plan);
    return {std::move(per_n), total + tail.limit, tail.error_estimate};
}

CylinderEnergyBreakdown cylinder_sce(AlphaIntegralVariant variant, const series::SeriesTailPlan& plan) {
    if (variant == AlphaIntegralVariant::ExactQuadrature) {
        throw UnsupportedVariant(
            "cylinder_sce: the exact alpha integral has no closed-form sector reduction; "
            "use quadratic, expfit or unbounded");
    }
    auto estimate = cylinder_series(plan);
    const double factor = alpha_factor(variant);
    const double prefactor = cylinder_prefactor();
    // 0.0 rather than prefactor * series * 0, which would be -0.
    const double total = variant == AlphaIntegralVariant::Unbounded ? 0.0
                                                                     : prefactor * estimate.value * factor;
    return CylinderEnergyBreakdown{
        .per_n_terms = std::move(estimate.per_n_terms),
        .series_value = estimate.value,
        .series_error = estimate.error_estimate,
        .alpha_factor = factor,
        .prefactor = prefactor,
        .total = total,
        .variant = variant,
    };
}

double cylinder_diffractive_n1() {
    return cylinder_prefactor() * cylinder_n_term(1) * alpha_factor(AlphaIntegralVariant::SemiclassicalQuadratic);
}

double alpha_integral(double x, AlphaIntegralVariant variant) {
    if (!std::isfinite(x) || x < 0.0) {
        throw std::domain_error("alpha_integral: x must be finite and >= 0");
    }
    switch (variant) {
    case AlphaIntegralVariant::ExactQuadrature: {
        if (x > 60.0) {
            throw std::domain_error("alpha_integral: exact quadrature supported for x <= 60");
        }
        // a = sin(t) removes the square-root endpoint behaviour at a = 1.
        auto integrand = [x](double t) {
            const double c = std::cos(t);
            return std::exp(-x * c) * c;
        };
        return quadrature::gauss_kronrod(integrand, 0.0, 0.5 * kPi, 1e-15, 1e-13).value;
    }
    case AlphaIntegralVariant::SemiclassicalQuadratic: {
        if (x == 0.0) {
            return 1.0;
        }
        return std::sqrt(2.0 / x) * std::exp(-0.5 * x) * specfun::dawson(std::sqrt(0.5 * x));
    }
    case AlphaIntegralVariant::ExponentialFit:
        return std::exp(-0.25 * kPi * x);
    case AlphaIntegralVariant::Unbounded:
        // int_0^inf exp(-x (1 - a^2/2)) da continued from x < 0 is purely imaginary.
        return 0.0;
    }
    throw UnsupportedVariant("alpha_integral: unknown variant");
}

double sec3_integral(double eps) {
    if (!(eps > 0.0 && eps < 0.5 * kPi)) {
        throw std::domain_error("sec3_integral: eps must lie in (0, pi/2)");
    }
    auto integrand = [](double phi) {
        const double c = std::cos(phi);
        return 1.0 / (c * c * c);
    };
    return quadrature::gauss_kronrod(integrand, 0.0, 0.5 * kPi - eps, 0.0, 1e-12, 20000).value;
}

double surface_correction_check(double eps) {
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> value = 3.0 * specfun::zeta(3) / 128.0 * (i * sec3_integral(eps));
    return value.real();
}

std::complex<double> fresnel_alpha_integral(double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw std::domain_error("fresnel_alpha_integral: gamma must be positive and finite");
    }
    const auto [c, s] = specfun::fresnel_cs(gamma);
    return std::polar(1.0, kPi * gamma * gamma) * std::complex<double>(c, -s) / gamma;
}

std::complex<double> fresnel_alpha_integral_unbounded(double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw std::domain_error("fresnel_alpha_integral_unbounded: gamma must be positive and finite");
    }
    return std::polar(1.0, kPi * gamma * gamma) * std::complex<double>(0.5, -0.5) / gamma;
}

std::vector<AlphaIntegralRow> alpha_curve_table(std::span<const double> x_grid) {
    std::vector<AlphaIntegralRow> rows;
    rows.reserve(x_grid.size());
    for (double x : x_grid) {
        if (!(x >= 0.0 && x <= 30.0)) {
            throw std::domain_error("alpha_curve_table: x must lie in [0, 30], got " + std::to_string(x));
        }
        rows.push_back({x, alpha_integral(x, AlphaIntegralVariant::ExactQuadrature),
                        alpha_integral(x, AlphaIntegralVariant::SemiclassicalQuadratic),
                        alpha_integral(x, AlphaIntegralVariant::ExponentialFit),
                        specfun::struve_combination(x)});
    }
    return rows;
}

}  // namespace casimir::cylinder
