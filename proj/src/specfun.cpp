#include "casimir/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

namespace casimir::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxBesselOrder = 64;
constexpr int kMaxZeroOrder = 20;
constexpr int kMaxZeroIndex = 64;

void require_finite_nonnegative(double x, const char* who) {
    if (!std::isfinite(x) || x < 0.0) {
        throw DomainError(std::string(who) + ": argument must be finite and >= 0, got " +
                          std::to_string(x));
    }
}

double bessel_j_series(int order, double x) {
    const double half = 0.5 * x;
    double term = 1.0;
    for (int j = 1; j <= order; ++j) {
        term *= half / j;
    }
    const double q = -half * half;
    double sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * (k + order));
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) {
            break;
        }
    }
    return sum;
}

// Miller's algorithm. Unnormalised J_k are generated downward from an order
// well beyond the turning point and scaled by J_0 + 2 sum_k J_2k = 1.
double bessel_j_miller(int order, double x) {
    const double base = std::max(static_cast<double>(order), x);
    int start = static_cast<int>(base + 24.0 + 3.0 * std::sqrt(base));
    start += start % 2;

    constexpr double kBig = 1e250;
    constexpr double kBigInv = 1e-250;
    const double two_over_x = 2.0 / x;
    double upper = 0.0;  // J_{k+1}
    double current = 1.0;  // J_k
    double wanted = 0.0;
    double even_sum = 0.0;
    bool add = false;
    for (int k = start; k > 0; --k) {
        const double lower = k * two_over_x * current - upper;
        upper = current;
        current = lower;
        if (std::abs(current) > kBig) {
            current *= kBigInv;
            upper *= kBigInv;
            wanted *= kBigInv;
            even_sum *= kBigInv;
        }
        if (add) {
            even_sum += current;
        }
        add = !add;
        if (k == order) {
            wanted = upper;
        }
    }
    const double norm = 2.0 * even_sum - current;
    return (order == 0 ? current : wanted) / norm;
}

double bessel_j_unchecked(int order, double x) {
    if (x == 0.0) {
        return order == 0 ? 1.0 : 0.0;
    }
    if (x * x <= 4.0 * (order + 1)) {
        return bessel_j_series(order, x);
    }
    return bessel_j_miller(order, x);
}

double bessel_j_prime_unchecked(int order, double x) {
    if (order == 0) {
        return -bessel_j_unchecked(1, x);
    }
    return 0.5 * (bessel_j_unchecked(order - 1, x) - bessel_j_unchecked(order + 1, x));
}

double bessel_j_second(int order, double x) {
    const double nu2 = static_cast<double>(order) * order;
    return -bessel_j_prime_unchecked(order, x) / x - (1.0 - nu2 / (x * x)) * bessel_j_unchecked(order, x);
}

}  // namespace

double bessel_j(int order, double x) {
    if (order < 0 || order > kMaxBesselOrder) {
        throw DomainError("bessel_j: unsupported order " + std::to_string(order));
    }
    require_finite_nonnegative(x, "bessel_j");
    return bessel_j_unchecked(order, x);
}

double bessel_j_prime(int order, double x) {
    if (order < 0 || order >= kMaxBesselOrder) {
        throw DomainError("bessel_j_prime: unsupported order " + std::to_string(order));
    }
    require_finite_nonnegative(x, "bessel_j_prime");
    return bessel_j_prime_unchecked(order, x);
}

double mcmahon_zero_guess(int order, int k, ZeroKind kind) {
    const double mu = 4.0 * order * order;
    if (kind == ZeroKind::Function) {
        const double beta = (k + 0.5 * order - 0.25) * kPi;
        const double e = 8.0 * beta;
        return beta - (mu - 1.0) / e - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e * e * e);
    }
    if (order == 0 && k == 1) {
        return 0.0;
    }
    const double beta = (k + 0.5 * order - 0.75) * kPi;
    const double e = 8.0 * beta;
    return beta - (mu + 3.0) / e - 4.0 * (7.0 * mu * mu + 82.0 * mu - 9.0) / (3.0 * e * e * e);
}

double bessel_j_zero(int order, int k, ZeroKind kind) {
    if (order < 0 || order > kMaxZeroOrder) {
        throw DomainError("bessel_j_zero: unsupported order " + std::to_string(order));
    }
    if (k < 1 || k > kMaxZeroIndex) {
        throw DomainError("bessel_j_zero: unsupported zero index " + std::to_string(k));
    }
    const bool derivative = kind == ZeroKind::Derivative;
    if (derivative && order == 0 && k == 1) {
        return 0.0;
    }

    auto f = [&](double x) {
        return derivative ? bessel_j_prime_unchecked(order, x) : bessel_j_unchecked(order, x);
    };
    auto df = [&](double x) {
        return derivative ? bessel_j_second(order, x) : bessel_j_prime_unchecked(order, x);
    };

    // Every positive zero of J_n and J'_n (n >= 1) lies beyond x = n, and
    // consecutive zeros are more than 1.5 apart for the supported orders.
    int remaining = (derivative && order == 0) ? k - 1 : k;
    constexpr double kStep = 0.5;
    double lo = std::max(static_cast<double>(order), 0.5);
    double f_lo = f(lo);
    double hi = lo;
    double f_hi = f_lo;
    for (int steps = 0;; ++steps) {
        if (steps > 4000) {
            throw BracketError("bessel_j_zero: scan did not bracket the requested zero");
        }
        hi = lo + kStep;
        f_hi = f(hi);
        if ((f_lo < 0.0) != (f_hi < 0.0) && --remaining == 0) {
            break;
        }
        lo = hi;
        f_lo = f_hi;
    }

    double x = mcmahon_zero_guess(order, k, kind);
    if (!(x > lo && x < hi)) {
        x = 0.5 * (lo + hi);
    }
    for (int iter = 0; iter < 200; ++iter) {
        const double fx = f(x);
        if (fx == 0.0) {
            return x;
        }
        if ((fx < 0.0) == (f_lo < 0.0)) {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
        }
        double next = x - fx / df(x);
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        if (std::abs(next - x) <= 1e-15 * x || hi - lo <= 4e-16 * x) {
            return next;
        }
        x = next;
    }
    throw BracketError("bessel_j_zero: refinement did not converge");
}

double bessel_i1_series(double x) {
    const double half = 0.5 * x;
    const double q = half * half;
    double term = half;
    double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1));
        sum += term;
        if (term <= 1e-17 * sum) {
            break;
        }
    }
    return sum;
}

double bessel_i1_asymptotic(double x) {
    constexpr double mu = 4.0;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 100; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double next = -term * (mu - odd * odd) / (k * 8.0 * x);
        if (std::abs(next) >= std::abs(term)) {
            break;
        }
        term = next;
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) {
            break;
        }
    }
    return std::exp(x) / std::sqrt(2.0 * kPi * x) * sum;
}

double bessel_i1(double x) {
    require_finite_nonnegative(x, "bessel_i1");
    if (x > 700.0) {
        throw std::overflow_error("bessel_i1: argument beyond 700 overflows binary64");
    }
    return x <= kSeriesAsymptoticSwitchI1 ? bessel_i1_series(x) : bessel_i1_asymptotic(x);
}

double struve_combination_series(double x) {
    using ld = long double;
    const ld half = static_cast<ld>(x) / 2;
    const ld q = half * half;
    const ld pi = std::numbers::pi_v<long double>;

    ld h_term = 2 / pi;  // 1 / (Gamma(3/2) Gamma(1/2))
    ld h_sum = h_term;
    ld i_term = half;
    ld i_sum = i_term;
    for (int k = 1; k < 400; ++k) {
        const ld kk = k;
        h_term *= q / ((kk + 0.5L) * (kk - 0.5L));
        i_term *= q / (kk * (kk + 1));
        h_sum += h_term;
        i_sum += i_term;
        if (h_term <= 1e-21L * h_sum && i_term <= 1e-21L * i_sum) {
            break;
        }
    }
    return static_cast<double>(pi / 2 * (h_sum - i_sum));
}

double struve_combination_asymptotic(double x) {
    // (pi/2)(L_{-1}(x) - I_1(x)) ~ sum_k (2k-1)!!(2k+1)!! / x^{2k+2}, truncated
    // at the smallest term.
    const double inv_x2 = 1.0 / (x * x);
    double term = inv_x2;
    double sum = term;
    for (int k = 1; k < 200; ++k) {
        const double ratio = (4.0 * k * k - 1.0) * inv_x2;
        if (ratio >= 1.0) {
            break;
        }
        term *= ratio;
        sum += term;
        if (term <= 1e-17 * sum) {
            break;
        }
    }
    return sum;
}

double struve_combination(double x) {
    require_finite_nonnegative(x, "struve_combination");
    if (x > 60.0) {
        throw DomainError("struve_combination: supported for x <= 60");
    }
    return x <= kSeriesAsymptoticSwitchStruve ? struve_combination_series(x)
                                              : struve_combination_asymptotic(x);
}

double dawson_series(double z) {
    // exp(-z^2) sum_k z^{2k+1} / (k! (2k+1)); all terms positive.
    const double z2 = z * z;
    double term = z;
    double sum = z;
    for (int k = 1; k < 500; ++k) {
        term *= z2 / k;
        const double contribution = term / (2.0 * k + 1.0);
        sum += contribution;
        if (contribution <= 1e-17 * sum) {
            break;
        }
    }
    return std::exp(-z2) * sum;
}

double dawson_asymptotic(double z) {
    const double inv = 1.0 / (2.0 * z * z);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 500; ++k) {
        const double ratio = (2.0 * k - 1.0) * inv;
        if (ratio >= 1.0) {
            break;
        }
        term *= ratio;
        sum += term;
        if (term <= 1e-17 * sum) {
            break;
        }
    }
    return sum / (2.0 * z);
}

double dawson(double z) {
    if (!std::isfinite(z)) {
        throw DomainError("dawson: argument must be finite");
    }
    if (z < 0.0) {
        return -dawson(-z);
    }
    if (z == 0.0) {
        return 0.0;
    }
    return z <= kSeriesAsymptoticSwitchDawson ? dawson_series(z) : dawson_asymptotic(z);
}

FresnelPair fresnel_cs(double gamma) {
    if (!std::isfinite(gamma)) {
        throw DomainError("fresnel_cs: argument must be finite");
    }
    if (gamma < 0.0) {
        const auto [c, s] = fresnel_cs(-gamma);
        return {-c, -s};
    }
    if (gamma == 0.0) {
        return {0.0, 0.0};
    }

    constexpr double kSeriesLimit = 1.5;
    if (gamma <= kSeriesLimit) {
        // term_m = (pi g^2/2)^m g / m!; even m feed C, odd m feed S.
        const double p = 0.5 * kPi * gamma * gamma;
        double term = gamma;
        double c = gamma;
        double s = 0.0;
        for (int m = 1; m < 200; ++m) {
            term *= p / m;
            const double contribution = term / (2.0 * m + 1.0);
            const bool negative = (m / 2) % 2 == 1;
            (m % 2 == 0 ? c : s) += negative ? -contribution : contribution;
            if (contribution <= 1e-17 * std::max(std::abs(c), std::abs(s))) {
                break;
            }
        }
        return {c, s};
    }

    // Modified Lentz evaluation of the erfc continued fraction.
    using cd = std::complex<double>;
    constexpr double kTiny = 1e-300;
    cd b(1.0, -kPi * gamma * gamma);
    cd c = 1.0 / kTiny;
    cd d = 1.0 / b;
    cd h = d;
    double n = -1.0;
    for (int k = 2; k < 1000; ++k) {
        n += 2.0;
        const double a = -n * (n + 1.0);
        b += 4.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const cd delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) {
            break;
        }
    }
    h *= cd(gamma, -gamma);
    const double phase = 0.5 * kPi * gamma * gamma;
    const cd cs = cd(0.5, 0.5) * (1.0 - cd(std::cos(phase), std::sin(phase)) * h);
    return {cs.real(), cs.imag()};
}

namespace {

// Apery's series: zeta(3) = (5/2) sum_k (-1)^{k+1} / (k^3 binom(2k,k)).
double apery_zeta3() {
    double sum = 0.0;
    double binom = 1.0;
    for (int k = 1; k <= 40; ++k) {
        binom *= 2.0 * (2.0 * k - 1.0) / k;
        const double term = 1.0 / (static_cast<double>(k) * k * k * binom);
        sum += (k % 2 == 1) ? term : -term;
    }
    return 2.5 * sum;
}

}  // namespace

double zeta(int s) {
    switch (s) {
    case 2:
        return kPi * kPi / 6.0;
    case 3: {
        static const double zeta3 = apery_zeta3();
        return zeta3;
    }
    case 4:
        return kPi * kPi * kPi * kPi / 90.0;
    default:
        throw DomainError("zeta: only s in {2,3,4} is supported, got " + std::to_string(s));
    }
}

}  // namespace casimir::specfun
