#include "casimir/wkb.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "casimir/specfun.hpp"

namespace casimir::wkb {

namespace {

constexpr double kPi = std::numbers::pi;

double f_ell_derivative(int ell, double x) {
    return std::sqrt(x * x - static_cast<double>(ell) * ell) / x;
}

}  // namespace

double f_ell(int ell, double x) {
    if (ell < 0) {
        throw std::domain_error("f_ell: partial wave must be >= 0");
    }
    if (!(x >= ell)) {
        throw std::domain_error("f_ell: requires x >= ell, got x = " + std::to_string(x) +
                                " for ell = " + std::to_string(ell));
    }
    if (ell == 0) {
        return x;
    }
    const double l = ell;
    return std::sqrt(x * x - l * l) - l * std::acos(l / x);
}

double quantisation_phase(int n, BoundaryCondition bc) {
    const double shift = bc == BoundaryCondition::Dirichlet ? 0.25 : -0.25;
    return kPi * (n + 0.5 + shift);
}

double wkb_zero(int ell, int n, BoundaryCondition bc) {
    if (ell < 0 || n < 0) {
        throw std::domain_error("wkb_zero: ell and n must be non-negative");
    }
    const double target = quantisation_phase(n, bc);
    if (ell == 0) {
        return target;
    }
    // f_ell is increasing with f_ell(x) >= x - ell (1 + pi/2).
    double lo = ell;
    double hi = target + ell * (1.0 + 0.5 * kPi) + 1.0;
    double x = 0.5 * (lo + hi);
    for (int iter = 0; iter < 300; ++iter) {
        const double g = f_ell(ell, x) - target;
        if (g == 0.0) {
            return x;
        }
        (g < 0.0 ? lo : hi) = x;
        double next = x - g / f_ell_derivative(ell, x);
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        if (std::abs(next - x) <= 1e-15 * x || hi - lo <= 4e-16 * x) {
            return next;
        }
        x = next;
    }
    throw std::runtime_error("wkb_zero: root iteration did not converge");
}

WkbMode wkb_mode(int ell, int n, BoundaryCondition bc) {
    return {ell, n, bc, wkb_zero(ell, n, bc)};
}

std::vector<SpectrumRow> spectrum_report(int ell_max, int n_max, BoundaryCondition bc) {
    if (ell_max < 0 || ell_max > 20 || n_max < 0 || n_max > 50) {
        throw std::domain_error("spectrum_report: requires 0 <= ell_max <= 20 and 0 <= n_max <= 50");
    }
    const auto kind = bc == BoundaryCondition::Dirichlet ? specfun::ZeroKind::Function
                                                         : specfun::ZeroKind::Derivative;
    std::vector<SpectrumRow> rows;
    rows.reserve(static_cast<std::size_t>(ell_max + 1) * (n_max + 1));
    for (int ell = 0; ell <= ell_max; ++ell) {
        for (int n = 0; n <= n_max; ++n) {
            SpectrumRow row{ell, n, bc, wkb_zero(ell, n, bc), specfun::bessel_j_zero(ell, n + 1, kind),
                            std::nullopt, false};
            if (row.x_exact == 0.0) {
                row.anomaly = true;
            } else {
                row.rel_error = std::abs(row.x_wkb - row.x_exact) / row.x_exact;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace casimir::wkb
