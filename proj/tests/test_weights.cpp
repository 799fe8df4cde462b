#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "hardycert/weights.hpp"
#include "oracles.hpp"

using hardy::WeightKind;
using hardy::WeightSequence;
using hardy::WeightSpec;

TEST_CASE("weight spec parsing round-trips") {
    auto c = WeightSpec::parse("constant");
    CHECK(c.kind == WeightKind::constant);
    CHECK(c.to_string() == "constant");

    auto p = WeightSpec::parse("power:0.5");
    CHECK(p.kind == WeightKind::power);
    CHECK(p.alpha == 0.5);
    CHECK(WeightSpec::parse(p.to_string()).alpha == 0.5);

    auto g = WeightSpec::parse("geometric:0.9");
    CHECK(g.kind == WeightKind::geometric);
    CHECK(g.ratio == 0.9);

    auto l = WeightSpec::parse("list:1,0.5,0.25");
    REQUIRE(l.entries.size() == 3);
    CHECK(l.entries[2] == 0.25);
    CHECK(WeightSpec::parse(l.to_string()).entries == l.entries);
}

TEST_CASE("weight spec rejects malformed input") {
    CHECK_THROWS_AS(WeightSpec::parse("power:"), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::parse("power:abc"), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::parse("power:-1.5"), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::parse("constant:3"), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::parse("geometric:0"), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::parse("list:"), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::parse("list:0,1"), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::parse("list:1,-2"), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::parse("nope:1"), std::invalid_argument);
}

TEST_CASE("integer-valued weights give exact partial sums and ratios") {
    WeightSequence ces(WeightSpec::constant(), 1000);
    WeightSequence tri(WeightSpec::power(1.0), 1000);
    for (std::size_t n = 1; n <= 1000; n += 7) {
        CHECK(ces.Lambda(n) == static_cast<double>(n));
        CHECK(ces.ratio(n) == static_cast<double>(n));
        CHECK(tri.Lambda(n) == 0.5 * n * (n + 1.0));
        CHECK(tri.ratio(n) == 0.5 * (n + 1.0));
    }
}

TEST_CASE("prefix sums match long double direct sums") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto vals = oracle::random_weights(rng, 500);
        WeightSequence w(WeightSpec::explicit_list(vals), 500);
        long double s = 0.0L;
        for (std::size_t n = 1; n <= 500; ++n) {
            s += vals[n - 1];
            CHECK(w.Lambda(n) == doctest::Approx(static_cast<double>(s)).epsilon(1e-15));
        }
    }
}

TEST_CASE("geometric weights track the closed form") {
    WeightSequence w(WeightSpec::geometric(0.5), 60);
    for (std::size_t n = 1; n <= 60; ++n) {
        CHECK(w.lambda(n) == doctest::Approx(std::pow(0.5, static_cast<double>(n))));
        // Lambda_n = r (1 - r^n) / (1 - r)
        double closed = 0.5 * (1.0 - std::pow(0.5, static_cast<double>(n))) / 0.5;
        CHECK(w.Lambda(n) == doctest::Approx(closed).epsilon(1e-14));
    }
}

TEST_CASE("zero entries allowed past the first, ratio refuses them") {
    WeightSequence w(WeightSpec::explicit_list({1.0, 0.0, 2.0}), 3);
    CHECK_FALSE(w.all_positive());
    CHECK(w.Lambda(2) == 1.0);
    CHECK(w.Lambda(3) == 3.0);
    CHECK_THROWS_AS(w.ratio(2), std::domain_error);
    CHECK(w.ratio(3) == doctest::Approx(1.5));

    WeightSequence pos(WeightSpec::explicit_list({1.0, 2.0}), 2);
    CHECK(pos.all_positive());
}

TEST_CASE("sequence construction rejects bad shapes") {
    CHECK_THROWS_AS(WeightSequence(WeightSpec::explicit_list({1.0}), 5), std::invalid_argument);
    CHECK_THROWS_AS(WeightSequence(WeightSpec::constant(), 0), std::invalid_argument);
}

TEST_CASE("power sum brackets contain the direct sums") {
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
        for (std::size_t n : {1ul, 2ul, 5ul, 27ul, 100ul, 1000ul}) {
            long double s = 0.0L;
            for (std::size_t i = 1; i <= n; ++i)
                s += std::pow(static_cast<long double>(i), static_cast<long double>(r));
            auto b = hardy::power_sum_bounds(n, r);
            CHECK_FALSE(b.extended);
            CHECK(b.lower <= static_cast<double>(s) * (1.0 + 1e-12));
            CHECK(b.upper >= static_cast<double>(s) * (1.0 - 1e-12));
        }
    }
}

TEST_CASE("power sum bracket endpoints") {
    auto b0 = hardy::power_sum_bounds(42, 0.0);
    CHECK(b0.lower == 42.0);
    CHECK(b0.upper == 42.0);

    auto b1 = hardy::power_sum_bounds(10, 1.0);
    CHECK(b1.lower == doctest::Approx(55.0));
    CHECK(b1.upper == doctest::Approx(55.0));

    // only the upper bound survives for -1 < r < 0
    auto bn = hardy::power_sum_bounds(100, -0.5);
    CHECK(bn.extended);
    long double s = 0.0L;
    for (int i = 1; i <= 100; ++i) s += 1.0L / std::sqrt(static_cast<long double>(i));
    CHECK(bn.upper >= static_cast<double>(s) * (1.0 - 1e-12));

    CHECK_THROWS_AS(hardy::power_sum_bounds(10, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(hardy::power_sum_bounds(0, 0.5), std::invalid_argument);
}
