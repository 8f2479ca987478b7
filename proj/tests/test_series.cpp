#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "casimir/series.hpp"

using namespace casimir::series;

namespace {

constexpr double kPi = std::numbers::pi;

PartialSumSequence partial_sums(int first, int last, double (*term)(int)) {
    PartialSumSequence seq{static_cast<std::size_t>(first), 1, {}};
    long double s = 0.0L;
    for (int n = 1; n <= last; ++n) {
        s += term(n);
        if (n >= first) {
            seq.values.push_back(static_cast<double>(s));
        }
    }
    return seq;
}

double inverse_square(int n) { return 1.0 / (static_cast<double>(n) * n); }
double inverse_fourth(int n) {
    const double nn = static_cast<double>(n) * n;
    return 1.0 / (nn * nn);
}

}  // namespace

TEST_CASE("compensated sum recovers cancelled terms") {
    const std::vector<double> terms = {1.0, 1e100, 1.0, -1e100};
    CHECK(compensated_sum(terms) == 2.0);
    const auto prefix = compensated_prefix_sums(terms);
    REQUIRE(prefix.size() == 4);
    CHECK(prefix[0] == 1.0);
    CHECK(prefix[3] == 2.0);
}

TEST_CASE("compensated sum of many small terms") {
    std::vector<double> terms(1000000, 0.1);
    CHECK(std::abs(compensated_sum(terms) - 100000.0) < 1e-9);
}

TEST_CASE("non-finite terms are rejected") {
    const std::vector<double> terms = {1.0, std::numeric_limits<double>::quiet_NaN()};
    CHECK_THROWS_AS(compensated_sum(terms), NonFiniteTerm);
    const std::vector<double> inf = {std::numeric_limits<double>::infinity()};
    CHECK_THROWS_AS(compensated_prefix_sums(inf), NonFiniteTerm);
}

TEST_CASE("plan validation") {
    CHECK_NOTHROW(SeriesTailPlan{}.validate());
    CHECK_THROWS_AS((SeriesTailPlan{4, 4, 1e-5}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((SeriesTailPlan{50, 0, 1e-5}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((SeriesTailPlan{50, 4, 0.0}.validate()), std::invalid_argument);
}

TEST_CASE("too few partial sums") {
    PartialSumSequence seq{1, 1, {1.0, 2.0, 3.0}};
    CHECK_THROWS_AS(richardson_limit(seq, {50, 4, 1e-5}), InsufficientData);
}

TEST_CASE("constant sequences are fixed points") {
    PartialSumSequence seq{10, 1, std::vector<double>(8, 0.3)};
    const auto r = richardson_limit(seq, {17, 4, 1e-5});
    CHECK(r.limit == 0.3);
    // Only the rounding allowance remains.
    CHECK(r.error_estimate > 0.0);
    CHECK(r.error_estimate < 1e-9);
}

TEST_CASE("table diagonal raises the degree one step at a time") {
    // S_N = 1 + 1/N is reproduced exactly from degree one on.
    PartialSumSequence seq{5, 1, {}};
    for (int n = 5; n <= 10; ++n) {
        seq.values.push_back(1.0 + 1.0 / n);
    }
    const auto diag = richardson_table(seq, 3);
    REQUIRE(diag.size() == 4);
    CHECK(diag[0] == seq.values.back());
    for (std::size_t k = 1; k < diag.size(); ++k) {
        CHECK(std::abs(diag[k] - 1.0) < 1e-14);
    }
}

TEST_CASE("exact on random polynomial tails") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> degree_dist(1, 5);
        const int degree = degree_dist(rng);
        const double limit = coeff(rng);
        std::vector<double> c(static_cast<std::size_t>(degree) + 1);
        for (double& x : c) {
            x = coeff(rng);
        }
        PartialSumSequence seq{4, 4, {}};
        for (int n = 4; n <= 40; n += 4) {
            double v = limit;
            for (int k = 1; k <= degree; ++k) {
                v += c[static_cast<std::size_t>(k)] / std::pow(n, k);
            }
            seq.values.push_back(v);
        }
        const auto r = richardson_limit(seq, {40, degree, 1e-5});
        CHECK(std::abs(r.limit - limit) < 1e-10);
        CHECK(std::abs(r.limit - limit) <= r.error_estimate);
    }
}

TEST_CASE("zeta(2) from N = 46..50") {
    const auto seq = partial_sums(46, 50, inverse_square);
    const auto r = richardson_limit(seq, {50, 4, 1e-5});
    const double err = std::abs(r.limit - kPi * kPi / 6.0);
    CHECK(err < 1e-9);
    CHECK(err <= r.error_estimate);
}

TEST_CASE("zeta(4) from N = 46..50") {
    const auto seq = partial_sums(46, 50, inverse_fourth);
    const double exact = kPi * kPi * kPi * kPi / 90.0;
    const auto r = richardson_limit(seq, {50, 4, 1e-5});
    const double err = std::abs(r.limit - exact);
    // A degree-4 fit leaves the 1/(3 N^5) tail term: the residual is
    // (1/3) / (46 * 47 * 48 * 49 * 50), about 1.3e-9.
    const double predicted = (1.0 / 3.0) / (46.0 * 47.0 * 48.0 * 49.0 * 50.0);
    CHECK(err == doctest::Approx(predicted).epsilon(0.05));
    CHECK(err <= r.error_estimate);

    // Two more orders reach 1e-10 once the sums enter as offsets from S_50,
    // which keeps their rounding below the amplified truncation error.
    PartialSumSequence offsets{20, 5, {}};
    long double s50 = 0.0L;
    for (int n = 1; n <= 50; ++n) {
        s50 += inverse_fourth(n);
    }
    for (int count = 20; count <= 50; count += 5) {
        long double rest = 0.0L;
        for (int n = count + 1; n <= 50; ++n) {
            rest += inverse_fourth(n);
        }
        offsets.values.push_back(static_cast<double>(-rest));
    }
    const auto wide = richardson_limit(offsets, {50, 6, 1e-5});
    CHECK(std::abs(static_cast<double>(s50) + wide.limit - exact) < 1e-10);
}

TEST_CASE("error estimate bounds the true error across windows") {
    for (int last = 20; last <= 80; last += 5) {
        for (auto term : {inverse_square, inverse_fourth}) {
            const auto seq = partial_sums(last - 4, last, term);
            const double exact = term == inverse_square ? kPi * kPi / 6.0 : kPi * kPi * kPi * kPi / 90.0;
            const auto r = richardson_limit(seq, {last, 4, 1e-5});
            CHECK(std::abs(r.limit - exact) <= r.error_estimate);
        }
    }
}
