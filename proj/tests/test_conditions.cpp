#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hardycert/conditions.hpp"
#include "hardycert/weights.hpp"

using hardy::Verdict;
using hardy::WeightSequence;
using hardy::WeightSpec;

namespace {

WeightSequence cesaro(std::size_t n) { return WeightSequence(WeightSpec::constant(), n); }

}  // namespace

TEST_CASE("ratio growth constant is exact on integer families") {
    auto ces = cartlidge_L(cesaro(10001), 10000, 2.0);
    CHECK(ces.sup_value == 1.0);
    CHECK(ces.verdict == Verdict::holds);
    CHECK(ces.extras.at("bound") == doctest::Approx(2.0));
    for (double m : ces.margins) CHECK(m == 1.0);  // p - d_n with d_n = 1 exactly

    WeightSequence tri(WeightSpec::power(1.0), 10001);
    auto t = cartlidge_L(tri, 10000, 2.0);
    CHECK(t.sup_value == 0.5);
    CHECK(t.extras.at("bound") == doctest::Approx(2.0 / 1.5));
}

TEST_CASE("ratio growth without a target exponent is informational") {
    auto r = cartlidge_L(cesaro(11), 10);
    CHECK(r.verdict == Verdict::inconclusive);
    CHECK(r.sup_value == 1.0);
    CHECK(r.margins[3] == 1.0);  // raw differences when p is absent
}

TEST_CASE("ratio growth above p flips the verdict") {
    // lambda_n = n^2 has unbounded-looking growth? no: differences tend to 1/3;
    // use a list with one big jump instead
    WeightSequence w(WeightSpec::explicit_list({1.0, 1.0, 50.0, 1.0}), 4);
    auto r = cartlidge_L(w, 3, 2.0);
    CHECK(r.verdict == Verdict::violated);
    CHECK(r.first_violation.has_value());
}

TEST_CASE("first-order condition margins collapse to 1/(2(2n-1)) on cesaro") {
    const std::size_t n = 10000;
    auto rep = hardy::thm13_condition_check(cesaro(n + 1), 2.0, 1.0, n);
    CHECK(rep.verdict == Verdict::holds);
    REQUIRE(rep.margins.size() == n);
    for (std::size_t k = 1; k <= n; k += 13) {
        double closed = 1.0 / (2.0 * (2.0 * k - 1.0));
        CHECK(rep.margins[k - 1] == doctest::Approx(closed).epsilon(1e-12));
    }
}

TEST_CASE("second-order condition margins collapse to 1/(4n) on cesaro") {
    const std::size_t n = 10000;
    auto rep = hardy::cor14_condition_check(cesaro(n + 1), 2.0, 1.0, n);
    CHECK(rep.verdict == Verdict::holds);
    for (std::size_t k = 1; k <= n; k += 13)
        CHECK(rep.margins[k - 1] == doctest::Approx(1.0 / (4.0 * k)).epsilon(1e-12));
    CHECK(rep.extras.at("min_margin") == doctest::Approx(1.0 / (4.0 * n)).epsilon(1e-12));
}

TEST_CASE("first-order condition validates its parameter range") {
    CHECK_THROWS_AS(hardy::thm13_condition_check(cesaro(11), 2.0, 2.5, 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(hardy::thm13_condition_check(cesaro(11), 2.0, -1.0, 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(hardy::thm13_condition_check(cesaro(11), 1.0, 0.5, 10),
                    std::invalid_argument);
}

TEST_CASE("too-small L is detected, not silently accepted") {
    auto r13 = hardy::thm13_condition_check(cesaro(101), 2.0, 0.5, 100);
    CHECK(r13.verdict == Verdict::violated);
    auto r14 = hardy::cor14_condition_check(cesaro(101), 2.0, 0.5, 100);
    CHECK(r14.verdict == Verdict::violated);
    CHECK(r14.first_violation.has_value());
}

TEST_CASE("serial and parallel condition sweeps are bit-identical") {
    WeightSequence w(WeightSpec::power(0.5), 5001);
    auto a = hardy::cor14_condition_check(w, 2.0, 2.0 / 3.0, 5000, hardy::Exec::serial);
    auto b = hardy::cor14_condition_check(w, 2.0, 2.0 / 3.0, 5000, hardy::Exec::parallel);
    CHECK(a.margins == b.margins);
    CHECK(a.sup_value == b.sup_value);
}

TEST_CASE("geometric mean growth constant on cesaro") {
    const std::size_t n = 200;
    auto rep = hardy::carleman_M(cesaro(n + 1), n);
    // terms n log(1 + 1/n) increase toward 1, so the sup sits at the tail
    double want = n * std::log1p(1.0 / n);
    CHECK(rep.sup_value == doctest::Approx(want).epsilon(1e-13));
    CHECK(rep.extras.at("e_M") == doctest::Approx(std::exp(want)).epsilon(1e-13));
    CHECK(rep.sup_value < 1.0);

    // pointwise domination by the ratio differences
    auto growth = cartlidge_L(cesaro(n + 1), n);
    for (std::size_t k = 0; k < n; ++k) CHECK(rep.margins[k] <= growth.margins[k] + 1e-15);
}

TEST_CASE("averaged geometric constant matches the factorial closed form") {
    const std::size_t n = 120;
    auto rep = hardy::bennett_E(cesaro(n + 1), n);
    for (std::size_t k : {1ul, 2ul, 5ul, 40ul, 120ul}) {
        double closed = (k + 1.0) * std::exp(-std::lgamma(k + 1.0) / k);
        CHECK(rep.margins[k - 1] == doctest::Approx(closed).epsilon(1e-12));
    }
    // E_n increases toward e on these weights
    CHECK(rep.sup_value == doctest::Approx((n + 1.0) * std::exp(-std::lgamma(n + 1.0) / n))
                               .epsilon(1e-12));
    CHECK(rep.sup_value < std::numbers::e);
}

TEST_CASE("power weight expansion checks hold on the unit alpha interval") {
    for (double alpha : {0.0, 0.5, 1.0}) {
        for (double p : {2.0, 3.0}) {
            auto rep = hardy::thm61_checks(alpha, p, 2000);
            CHECK(rep.verdict == Verdict::holds);
            for (double m : rep.margins) CHECK(m >= 0.0);
            for (double m : rep.extra_margins.at("ratio_lower")) CHECK(m >= 0.0);
        }
    }
    CHECK(hardy::thm61_checks(0.0, 2.0, 100).extras.at("h_alpha") == doctest::Approx(1.0));
    CHECK(hardy::thm61_checks(1.0, 2.0, 100).extras.at("h_alpha") == doctest::Approx(2.0));
    CHECK_THROWS_AS(hardy::thm61_checks(1.5, 2.0, 100), std::invalid_argument);
}

TEST_CASE("lower bound failure probes across the p range") {
    auto high = hardy::ls_counterexample(0.6);
    CHECK(high.lhs == 1.0);
    CHECK(high.rhs == doctest::Approx(std::pow(1.5, 0.6)).epsilon(1e-14));
    CHECK(high.fails);

    auto half = hardy::ls_counterexample(0.5);
    CHECK_FALSE(half.fails);  // the single-spike vector is not enough at 1/2
    CHECK(half.pair_found);   // but a two-term vector already breaks it
    CHECK(half.pair_gap < 0.0);
    CHECK(half.a1 + half.a2 == doctest::Approx(1.0));

    auto low = hardy::ls_counterexample(0.25);
    CHECK_FALSE(low.fails);
    CHECK_FALSE(low.pair_found);

    CHECK_THROWS_AS(hardy::ls_counterexample(1.5), std::invalid_argument);
}

TEST_CASE("reversed regime margins and reported constants") {
    WeightSequence w(WeightSpec::power(-0.5), 1001);
    auto rep = hardy::reversed_condition_check(w, 0.25, 2.0, 1000);
    CHECK(rep.verdict == Verdict::holds);
    for (double m : rep.margins) CHECK(m >= -1e-13);
    for (double g : rep.extra_margins.at("growth")) CHECK(g >= 0.0);
    CHECK(rep.extras.at("decay_exponent") == doctest::Approx(-3.5).epsilon(1e-12));
    CHECK(rep.extras.at("U_root_p") == doctest::Approx(1.0 / 7.0).epsilon(1e-12));
}

TEST_CASE("reversed regime never certifies when the growth condition fails") {
    // lambda = n^{-0.5} but L far below the actual ratio growth
    WeightSequence w(WeightSpec::power(-0.5), 101);
    auto rep = hardy::reversed_condition_check(w, 0.25, 0.3, 100);
    CHECK(rep.extras.at("min_growth_margin") < 0.0);
    CHECK(rep.verdict != Verdict::holds);
}

TEST_CASE("weights must extend one past the checked prefix") {
    CHECK_THROWS_AS(cartlidge_L(cesaro(10), 10, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(hardy::cor14_condition_check(cesaro(10), 2.0, 1.0, 10),
                    std::invalid_argument);
}
