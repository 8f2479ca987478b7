#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "casimir/series.hpp"

namespace casimir::cylinder {

/// Field-theoretic electromagnetic self-energy of the cylinder, units hbar c L / R^2.
/// Reference constant for comparison only.
inline constexpr double kFieldTheoryReference = -0.0135613;

class UnsupportedVariant : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Treatment of the longitudinal-momentum fraction integral over alpha in [0, 1].
enum class AlphaIntegralVariant {
    ExactQuadrature,         ///< int_0^1 exp(-x sqrt(1 - a^2)) da
    SemiclassicalQuadratic,  ///< int_0^1 exp(-x (1 - a^2/2)) da
    ExponentialFit,          ///< exp(-pi x / 4)
    Unbounded,               ///< upper bound sent to infinity; real part vanishes
};

std::string_view to_string(AlphaIntegralVariant variant);
/// Accepts exact|quadratic|expfit|unbounded. Throws std::invalid_argument otherwise.
AlphaIntegralVariant parse_variant(std::string_view name);

/// sum_{w=1}^{n} 1 / sin^2(w pi / 2n), analytically (2 n^2 + 1) / 3.
double csc2_sum(int n);

/// (-1)^n (csc2_sum(n) - 1/2) / n^4 = (-1)^n (4 n^2 - 1) / (6 n^4).
double cylinder_n_term(int n);

/// 15 sqrt2 / (512 pi).
double cylinder_prefactor();

/// sum_n (-1)^n (4n^2 - 1)/(6 n^4) = -pi^2/18 + 7 pi^4/4320.
double alternating_series_closed_form();

/// Closed-form alpha factor multiplying prefactor x series:
///   quadratic:   int_0^1 (1 - a^2/2)^{-7/2} da = 28 sqrt2 / 15
///   expfit:      256 / pi^4
///   unbounded:   0
/// Throws UnsupportedVariant for ExactQuadrature.
double alpha_factor(AlphaIntegralVariant variant);

/// Adaptive quadrature of int_0^1 (1 - a^2/2)^{-7/2} da.
double alpha_factor_quadrature();

/// Closed-form coefficient of hbar c L / R^2 for the reducible variants.
double cylinder_closed_form(AlphaIntegralVariant variant);

struct SeriesEstimate {
    std::vector<double> per_n_terms;
    double value;
    double error_estimate;
};

/// Sum of cylinder_n_term over n = 1..plan.explicit_terms with Richardson
/// extrapolation. The series alternates, so only partial sums of the same
/// parity as explicit_terms enter the table (each parity class is smooth in 1/N).
SeriesEstimate cylinder_series(const series::SeriesTailPlan& plan);

struct CylinderEnergyBreakdown {
    std::vector<double> per_n_terms;
    double series_value;
    double series_error;
    double alpha_factor;
    double prefactor;
    double total;
    AlphaIntegralVariant variant;
};

/// total = prefactor * series * alpha factor; exactly 0 for Unbounded.
CylinderEnergyBreakdown cylinder_sce(AlphaIntegralVariant variant,
                                     const series::SeriesTailPlan& plan = {});

/// The two-reflection (n = 1) contribution of the quadratic variant, -7/(128 pi).
double cylinder_diffractive_n1();

/// Alpha integral as a function of x >= 0 in the requested approximation.
/// ExactQuadrature requires x <= 60.
double alpha_integral(double x, AlphaIntegralVariant variant);

/// Adaptive quadrature of int_0^{pi/2 - eps} sec^3(phi) dphi.
double sec3_integral(double eps);

/// Re[(3 zeta(3) / 128) i Q(eps)] with Q = sec3_integral(eps); zero for every eps.
double surface_correction_check(double eps);

/// int_0^1 exp(i pi g^2 (1 - a^2/2)) da = exp(i pi g^2) (C(g) - i S(g)) / g.
std::complex<double> fresnel_alpha_integral(double gamma);

/// Same with the upper bound moved to infinity: C and S replaced by 1/2.
std::complex<double> fresnel_alpha_integral_unbounded(double gamma);

struct AlphaIntegralRow {
    double x;
    double exact;
    double semiclassical;
    double exp_fit;
    double struve;
};

/// Rows of the three alpha-integral curves; exact is cross-checked against
/// the Struve/Bessel closed form. Requires x in [0, 30].
std::vector<AlphaIntegralRow> alpha_curve_table(std::span<const double> x_grid);

}  // namespace casimir::cylinder
