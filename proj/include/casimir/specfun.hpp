#pragma once

#include <stdexcept>
#include <utility>

namespace casimir::specfun {

/// Raised when a kernel is called outside its supported argument range.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a root bracket cannot be established or refined.
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ZeroKind { Function, Derivative };

/// J_order(x) for integer order <= 64 and finite x >= 0.
///
/// Ascending series while x^2 <= 4(order+1); Miller backward recurrence
/// normalised by J_0 + 2 sum J_2k = 1 otherwise.
double bessel_j(int order, double x);

/// J'_order(x) from the three-term relation.
double bessel_j_prime(int order, double x);

/// k-th positive zero of J_order (kind Function) or J'_order (kind Derivative).
///
/// For order 0 / Derivative the trivial zero at x = 0 is counted as k = 1.
/// Zeros are bracketed by a sign-change scan and refined by
/// bisection-safeguarded Newton iteration seeded with McMahon's expansion.
double bessel_j_zero(int order, int k, ZeroKind kind);

/// McMahon's large-zero expansion, used as the Newton seed.
double mcmahon_zero_guess(int order, int k, ZeroKind kind);

/// Modified Bessel I_1(x) for 0 <= x <= 700.
double bessel_i1(double x);

/// Ascending series of I_1, exposed for the switchover overlap checks.
double bessel_i1_series(double x);
/// Large-x Hankel expansion of I_1.
double bessel_i1_asymptotic(double x);

/// (pi/2) (H_{-1}(ix) - I_1(x)) for 0 <= x <= 60.
///
/// H_{-1}(ix) = sum_k (x/2)^{2k} / (Gamma(k+3/2) Gamma(k+1/2)) is real; the
/// combination equals the integral of exp(-x sqrt(1-a^2)) over a in [0,1].
/// The two series both grow like e^x while their difference decays like
/// 1/x^2, so the series branch is summed in extended precision and the
/// large-x branch uses the asymptotic expansion of L_{-1} - I_1.
double struve_combination(double x);

double struve_combination_series(double x);
double struve_combination_asymptotic(double x);

/// Dawson's integral D(z) = exp(-z^2) int_0^z exp(t^2) dt. Odd in z.
double dawson(double z);

double dawson_series(double z);
double dawson_asymptotic(double z);

struct FresnelPair {
    double c;
    double s;
};

/// Fresnel integrals C(g) = int_0^g cos(pi t^2/2) dt, S(g) = int_0^g sin(pi t^2/2) dt.
FresnelPair fresnel_cs(double gamma);

/// Riemann zeta at s in {2, 3, 4}.
double zeta(int s);

inline constexpr double kSeriesAsymptoticSwitchI1 = 20.0;
inline constexpr double kSeriesAsymptoticSwitchDawson = 5.0;
inline constexpr double kSeriesAsymptoticSwitchStruve = 22.0;

}  // namespace casimir::specfun
