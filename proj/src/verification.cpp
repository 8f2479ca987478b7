#include "casimir/verification.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "casimir/cylinder.hpp"
#include "casimir/oracles.hpp"
#include "casimir/orbits.hpp"
#include "casimir/series.hpp"
#include "casimir/specfun.hpp"
#include "casimir/sphere.hpp"
#include "casimir/wkb.hpp"

namespace casimir::verification {

namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

// Accumulates sub-checks of one criterion into a pass flag and a detail line.
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        passed_ = passed_ && ok;
        if (!detail_.empty()) {
            detail_ += "; ";
        }
        detail_ += ok ? what : "FAILED " + what;
    }

    void near(double value, double expected, double tol, const std::string& what) {
        expect(std::abs(value - expected) <= tol,
               what + "=" + num(value) + " (want " + num(expected) + " +/- " + num(tol) + ")");
    }

    CriterionResult finish(int id, std::string title) const { return {id, std::move(title), passed_, detail_}; }

private:
    bool passed_ = true;
    std::string detail_;
};

}  // namespace

CriterionResult check_sphere_headline() {
    Checker c;
    const auto sce = sphere::sphere_sce();
    c.near(sce.total, 0.04668, 5e-5, "total");
    c.near(sce.total / sphere::kFieldTheoryReference, 1.011, 0.002, "ratio to 0.04617");
    c.expect(sce.tail_error <= 1e-5, "tail_error=" + num(sce.tail_error) + " <= 1e-5");
    return c.finish(1, "sphere headline coefficient");
}

CriterionResult check_sphere_diameter_sum() {
    Checker c;
    const double closed = kPi * kPi * kPi / 1440.0;
    c.near(sphere::sphere_sce().diameter_sum, closed, 1e-12, "diameter_sum");
    std::vector<double> terms;
    for (int n = 1; n <= 20000; ++n) {
        terms.push_back(sphere::sphere_diameter_term(n));
    }
    c.near(series::compensated_sum(terms), closed, 1e-12, "explicit diameter sum (n<=2e4)");
    c.near(sphere::sphere_diameter_term(1), 1.0 / (16.0 * kPi), 1e-16, "n=1 term");
    return c.finish(2, "sphere diameter sum pi^3/1440");
}

CriterionResult check_sphere_tail_robustness() {
    Checker c;
    double totals[3];
    const int counts[3] = {30, 50, 70};
    for (int i = 0; i < 3; ++i) {
        totals[i] = sphere::sphere_sce({counts[i], 4, 1e-5}).total;
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            c.near(totals[i], totals[j], 1e-5,
                   "total(" + std::to_string(counts[i]) + ") vs total(" + std::to_string(counts[j]) + ")");
        }
    }
    const double brute = sphere::sphere_diameter_sum() + oracles::brute_force_sphere_generic_sum(100000);
    c.near(brute, totals[1], 1e-5, "brute-force N=1e5 total");
    return c.finish(3, "sphere tail robustness");
}

CriterionResult check_cylinder_headline() {
    using cylinder::AlphaIntegralVariant;
    Checker c;
    const double quadratic = cylinder::cylinder_sce(AlphaIntegralVariant::SemiclassicalQuadratic).total;
    const double closed = 7.0 * kPi * (7.0 * kPi * kPi - 240.0) / 276480.0;
    c.near(quadratic, closed, 1e-6, "quadratic total");
    c.near(quadratic, -0.0135940, 1e-6, "quadratic total vs -0.0135940");
    c.near(cylinder::cylinder_sce(AlphaIntegralVariant::ExponentialFit).total, -0.013533, 1e-5, "expfit total");
    const double unbounded = cylinder::cylinder_sce(AlphaIntegralVariant::Unbounded).total;
    c.expect(unbounded == 0.0 && !std::signbit(unbounded), "unbounded total=" + num(unbounded) + " (want exactly 0)");
    return c.finish(4, "cylinder headline coefficients");
}

CriterionResult check_cylinder_identities() {
    Checker c;
    double worst = 0.0;
    int worst_n = 0;
    for (int n = 1; n <= 10000; ++n) {
        const double expected = (4.0 * n * n - 1.0) / 6.0;
        const double rel = std::abs(cylinder::csc2_sum(n) - 0.5 - expected) / expected;
        if (rel > worst) {
            worst = rel;
            worst_n = n;
        }
    }
    c.expect(worst <= 1e-12, "max rel |csc2_sum(n)-1/2-(4n^2-1)/6| over n<=1e4 = " + num(worst) + " at n=" +
                                 std::to_string(worst_n));
    const auto series = cylinder::cylinder_series({50, 6, 1e-5});
    c.near(series.value, cylinder::alternating_series_closed_form(), 1e-10, "alternating series (N=50, order 6)");
    c.near(cylinder::alpha_factor_quadrature(), 28.0 * std::numbers::sqrt2 / 15.0, 1e-10, "alpha-factor quadrature");
    return c.finish(5, "cylinder identities");
}

CriterionResult check_diffractive_term() {
    Checker c;
    const double n1 = cylinder::cylinder_diffractive_n1();
    c.near(n1, -7.0 / (128.0 * kPi), 1e-6, "n=1 term");
    c.near(n1, -0.0174077, 1e-6, "n=1 term vs -0.0174077");
    const double total = cylinder::cylinder_sce(cylinder::AlphaIntegralVariant::SemiclassicalQuadratic).total;
    c.expect(std::abs(n1) > std::abs(total), "|n=1|=" + num(std::abs(n1)) + " > |total|=" + num(std::abs(total)));
    return c.finish(6, "two-reflection diffractive term");
}

CriterionResult check_wkb_spectrum() {
    Checker c;
    for (auto bc : orbits::kAllBoundaryConditions) {
        const auto rows = wkb::spectrum_report(10, 10, bc);
        double worst = 0.0;
        std::ostringstream violations;
        int count = 0;
        for (const auto& r : rows) {
            if (r.anomaly) {
                continue;
            }
            const double e = *r.rel_error;
            worst = std::max(worst, e);
            if (e >= 0.021 || (r.n >= 1 && e >= 0.01)) {
                if (count < 6) {
                    violations << " (" << r.ell << "," << r.n << ")=" << num(e);
                }
                ++count;
            }
        }
        bool monotone = true;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            if (rows[i].ell == rows[i - 1].ell && rows[i - 1].rel_error) {
                monotone = monotone && *rows[i].rel_error < *rows[i - 1].rel_error;
            }
        }
        const std::string tag(orbits::to_string(bc));
        c.expect(monotone, tag + ": error decreasing in n");
        c.expect(count == 0, tag + ": max rel error " + num(worst) + ", " + std::to_string(count) +
                                 " rows outside bounds" + violations.str());
    }
    const auto neumann = wkb::spectrum_report(0, 0, orbits::BoundaryCondition::Neumann).front();
    c.expect(neumann.anomaly && !neumann.rel_error && std::abs(neumann.x_wkb - kPi / 4.0) < 1e-12 &&
                 neumann.x_exact == 0.0,
             "(0,0,N) flagged: wkb=" + num(neumann.x_wkb) + " exact=" + num(neumann.x_exact));
    return c.finish(7, "WKB spectrum vs exact Bessel zeros");
}

CriterionResult check_alpha_integral_curves() {
    Checker c;
    const std::vector<double> grid = {0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0};
    double worst = 0.0;
    bool ordered = true;
    for (const auto& row : cylinder::alpha_curve_table(grid)) {
        worst = std::max(worst, std::abs(row.exact - row.struve));
        ordered = ordered && row.exact >= row.semiclassical;
    }
    c.expect(worst <= 1e-8, "max |quadrature - struve| = " + num(worst));
    c.expect(ordered, "exact >= semiclassical on grid");
    const double tail = 900.0 * cylinder::alpha_integral(30.0, cylinder::AlphaIntegralVariant::ExactQuadrature);
    c.expect(tail >= 0.9 && tail <= 1.1, "x^2 exact(30)=" + num(tail));
    return c.finish(8, "alpha-integral curves");
}

CriterionResult check_surface_correction() {
    Checker c;
    for (double eps : {0.5, 0.1, 0.001}) {
        const double v = cylinder::surface_correction_check(eps);
        c.expect(v == 0.0, "eps=" + num(eps) + " -> " + num(v));
    }
    return c.finish(9, "surface correction vanishes");
}

CriterionResult check_property_suites() {
    Checker c;

    // Richardson is exact to roundoff on tails polynomial in 1/N.
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    bool exact = true;
    for (int trial = 0; trial < 50; ++trial) {
        const double limit = coeff(rng);
        double cs[5];
        for (double& x : cs) {
            x = coeff(rng);
        }
        series::PartialSumSequence seq{10, 1, {}};
        for (int n = 10; n <= 20; ++n) {
            double v = limit;
            for (int k = 1; k <= 4; ++k) {
                v += cs[k] / std::pow(n, k);
            }
            seq.values.push_back(v);
        }
        const auto r = series::richardson_limit(seq, {20, 4, 1e-5});
        exact = exact && std::abs(r.limit - limit) < 1e-10;
    }
    c.expect(exact, "Richardson exact on degree-4 tails");

    bool interlace = true;
    using specfun::ZeroKind;
    for (int l = 0; l <= 10; ++l) {
        for (int k = 1; k <= 10; ++k) {
            const double a = specfun::bessel_j_zero(l, k, ZeroKind::Function);
            const double b = specfun::bessel_j_zero(l + 1, k, ZeroKind::Function);
            const double d = specfun::bessel_j_zero(l, k + 1, ZeroKind::Function);
            interlace = interlace && a < b && b < d;
        }
    }
    c.expect(interlace, "Bessel zeros interlace (l,k <= 10)");

    double residual = 0.0;
    constexpr double h = 1e-4;
    for (int i = 0; i <= 500; ++i) {
        const double z = 0.01 * i;
        const double d = (specfun::dawson(z + h) - specfun::dawson(z - h)) / (2.0 * h);
        residual = std::max(residual, std::abs(d + 2.0 * z * specfun::dawson(z) - 1.0));
    }
    c.expect(residual < 1e-8, "Dawson ODE residual " + num(residual));

    bool fresnel = true;
    for (int i = 0; i <= 480; ++i) {
        const double g = 2.0 + 0.1 * i;
        const auto [cc, ss] = specfun::fresnel_cs(g);
        fresnel = fresnel && std::abs(cc - 0.5) < 1.0 / (kPi * g) && std::abs(ss - 0.5) < 1.0 / (kPi * g);
    }
    const auto far = specfun::fresnel_cs(50.0);
    fresnel = fresnel && std::abs(far.c - 0.5) <= 0.01 && std::abs(far.s - 0.5) <= 0.01;
    c.expect(fresnel, "Fresnel C,S -> 1/2");

    const double l21 = orbits::orbit_length({2, 1});
    bool lengths = std::abs(orbits::orbit_length({4, 1}) - std::numbers::sqrt2 * l21) < 1e-12;
    for (int w = 1; w <= 20; ++w) {
        lengths = lengths && orbits::orbit_length({2 * w, w}) == 4.0 * w;
    }
    c.expect(lengths, "orbit lengths: L(4,1)=sqrt2 L(2,1), L(2w,w)=4w");
    return c.finish(10, "property suites");
}

std::vector<CriterionResult> run_acceptance_suite() {
    return {check_sphere_headline(),     check_sphere_diameter_sum(),    check_sphere_tail_robustness(),
            check_cylinder_headline(),   check_cylinder_identities(),    check_diffractive_term(),
            check_wkb_spectrum(),        check_alpha_integral_curves(),  check_surface_correction(),
            check_property_suites()};
}

bool report(const std::vector<CriterionResult>& results, std::ostream& out) {
    bool all = true;
    for (const auto& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.title << ": " << r.detail << '\n';
        all = all && r.passed;
    }
    return all;
}

}  // namespace casimir::verification
