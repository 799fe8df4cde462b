#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "hardycert/wirtinger.hpp"
#include "oracles.hpp"

using hardy::TelescopeSign;
using hardy::TridiagonalForm;

namespace {

std::vector<double> gaussian(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g;
    std::vector<double> x(n);
    for (auto& v : x) v = g(rng);
    return x;
}

// Q(x) evaluated term by term, independent of the matrix route
double q_direct(double a, double b, const std::vector<double>& x) {
    const std::size_t n = x.size();
    long double q = static_cast<long double>(b) * b * x[0] * x[0] +
                    static_cast<long double>(a) * a * x[n - 1] * x[n - 1];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        long double d = static_cast<long double>(a) * x[i] - static_cast<long double>(b) * x[i + 1];
        q += d * d;
    }
    return static_cast<double>(q);
}

}  // namespace

TEST_CASE("spectrum closed form, small cases by hand") {
    auto one = hardy::tridiag_spectrum(1.0, 1.0, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == doctest::Approx(2.0));  // a^2 + b^2, cos(pi/2) = 0

    auto three = hardy::tridiag_spectrum(1.0, 1.0, 3);
    CHECK(three[0] == doctest::Approx(2.0 - std::numbers::sqrt2).epsilon(1e-14));
    CHECK(three[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(three[2] == doctest::Approx(2.0 + std::numbers::sqrt2).epsilon(1e-14));
}

TEST_CASE("form matrix matches the quadratic form and the dense oracle") {
    std::mt19937_64 rng(17);
    for (double a : {1.0, 0.7}) {
        for (double b : {1.0, 1.3}) {
            TridiagonalForm form{a, b, 12};
            auto t = form.matrix();
            auto spec = hardy::tridiag_spectrum(a, b, 12);
            auto want = hardy::all_eigenvalues(t);
            for (std::size_t k = 0; k < 12; ++k)
                CHECK(spec[k] == doctest::Approx(want[k]).epsilon(1e-11));

            for (int trial = 0; trial < 5; ++trial) {
                auto x = gaussian(rng, 12);
                double q = hardy::quadratic_form(a, b, x);
                CHECK(q == doctest::Approx(q_direct(a, b, x)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("sandwich margins are nonnegative on random vectors") {
    std::mt19937_64 rng(19);
    std::vector<std::vector<double>> xs;
    for (int i = 0; i < 300; ++i) xs.push_back(gaussian(rng, 33));
    auto margins = hardy::lossers_bounds_batch(0.8, 1.1, xs);
    REQUIRE(margins.size() == xs.size());
    for (const auto& m : margins) {
        CHECK(m.lower >= -1e-12);
        CHECK(m.upper >= -1e-12);
    }
}

TEST_CASE("sandwich is tight at the extreme eigenvectors") {
    const std::size_t n = 16;
    const double t = std::numbers::pi / (n + 1.0);
    std::vector<double> low(n), high(n);
    for (std::size_t k = 1; k <= n; ++k) {
        low[k - 1] = std::sin(k * t);                        // lowest mode
        high[k - 1] = (k % 2 ? 1.0 : -1.0) * std::sin(k * t);  // alternating mode
    }
    auto ml = hardy::lossers_bounds_check(1.0, 1.0, low);
    auto mh = hardy::lossers_bounds_check(1.0, 1.0, high);
    CHECK(std::abs(ml.lower) < 1e-10);
    CHECK(std::abs(mh.upper) < 1e-10);
}

TEST_CASE("unit-coefficient endpoints match the sine and cosine forms") {
    for (std::size_t n : {1ul, 2ul, 10ul, 63ul}) {
        double lo = hardy::fan_taussky_todd_lower(n);
        double hi = hardy::milovanovic_upper(n);
        double t = std::numbers::pi / (2.0 * (n + 1.0));
        CHECK(lo == doctest::Approx(4.0 * std::sin(t) * std::sin(t)).epsilon(1e-15));
        CHECK(hi == doctest::Approx(4.0 * std::cos(t) * std::cos(t)).epsilon(1e-15));
        auto spec = hardy::tridiag_spectrum(1.0, 1.0, n);
        CHECK(lo == doctest::Approx(spec.front()).epsilon(1e-13));
        CHECK(hi == doctest::Approx(spec.back()).epsilon(1e-13));
    }
}

TEST_CASE("telescoping split constants by hand for n = 3") {
    auto r = hardy::redheffer_mu(1.0, 1.0, 3, TelescopeSign::plus);
    REQUIRE(r.mu.size() == 2);
    CHECK(r.mu[0] == doctest::Approx(1.0 + std::numbers::sqrt2).epsilon(1e-15));
    CHECK(r.mu[1] == doctest::Approx(1.0 + std::numbers::sqrt2 / 2.0).epsilon(1e-15));
    CHECK(r.constant == doctest::Approx(2.0 + std::numbers::sqrt2).epsilon(1e-15));
    CHECK(r.max_identity_error < 1e-14);

    auto m = hardy::redheffer_mu(1.0, 1.0, 3, TelescopeSign::minus);
    CHECK(m.constant == doctest::Approx(2.0 - std::numbers::sqrt2).epsilon(1e-14));
    CHECK(m.max_identity_error < 1e-12);
}

TEST_CASE("telescoping identity holds at larger sizes and both signs") {
    for (std::size_t n : {2ul, 17ul, 64ul, 501ul}) {
        for (auto sign : {TelescopeSign::plus, TelescopeSign::minus}) {
            auto r = hardy::redheffer_mu(1.3, 0.9, n, sign);
            CHECK(r.max_identity_error < 1e-12);
            double t = std::numbers::pi / (n + 1.0);
            double want = 1.3 * 1.3 + 0.9 * 0.9 +
                          (sign == TelescopeSign::plus ? 2.0 : -2.0) * 1.3 * 0.9 * std::cos(t);
            CHECK(r.constant == doctest::Approx(want).epsilon(1e-14));
        }
    }
}

TEST_CASE("split constants bracket the quadratic form on random vectors") {
    // plus split certifies Q <= c_plus ||x||^2, minus certifies Q >= c_minus ||x||^2
    std::mt19937_64 rng(29);
    const std::size_t n = 40;
    auto plus = hardy::redheffer_mu(1.0, 1.0, n, TelescopeSign::plus);
    auto minus = hardy::redheffer_mu(1.0, 1.0, n, TelescopeSign::minus);
    for (int trial = 0; trial < 50; ++trial) {
        auto x = gaussian(rng, n);
        double q = hardy::quadratic_form(1.0, 1.0, x);
        long double nrm = 0.0L;
        for (double v : x) nrm += static_cast<long double>(v) * v;
        CHECK(q <= plus.constant * static_cast<double>(nrm) * (1.0 + 1e-12));
        CHECK(q >= minus.constant * static_cast<double>(nrm) * (1.0 - 1e-12));
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(hardy::tridiag_spectrum(0.0, 1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(hardy::tridiag_spectrum(1.0, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(hardy::redheffer_mu(1.0, 1.0, 1, TelescopeSign::plus),
                    std::invalid_argument);
    CHECK_THROWS_AS(hardy::quadratic_form(1.0, 1.0, std::vector<double>{}),
                    std::invalid_argument);
}
