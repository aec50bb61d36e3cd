#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "psv/atlas.hpp"

using namespace psv;
using namespace psv::atlas;

TEST_CASE("exponent spot values") {
    CHECK(exponent_of(BoundId::Corollary, 5, 8.0) == doctest::Approx(8.8).epsilon(1e-12));
    CHECK(exponent_of(BoundId::Thm1i, 3, 5.0) == doctest::Approx(5.5).epsilon(1e-12));
    CHECK(exponent_of(BoundId::Trivial1, 3, 5.0) == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(exponent_of(BoundId::Trivial2, 3, 5.0) == doctest::Approx(6.0).epsilon(1e-12));
    // munsch at k=5, lambda=8: max(8 (1 - 1/30) + 1 + 1/6, line is single-term)
    CHECK(exponent_of(BoundId::Munsch, 5, 8.0) ==
          doctest::Approx(8.0 * 29 / 30 + 1 + 1.0 / 6).epsilon(1e-12));
}

TEST_CASE("corollary equals the t=k member of the family") {
    for (int k : {2, 3, 4, 7}) {
        for (double lambda = k + 0.25; lambda < 2 * k; lambda += 0.5) {
            CHECK(f_kt(k, k, lambda) ==
                  doctest::Approx(exponent_of(BoundId::Corollary, k, lambda)).epsilon(1e-12));
        }
    }
}

TEST_CASE("both rational forms of f_kt agree exactly") {
    for (int k = 2; k <= 12; ++k)
        for (int t = 1; t <= k; ++t)
            for (int num = 4 * k + 1; num < 8 * k; num += 3) {
                Rational lambda(num, 4);
                CHECK(f_kt_form1(k, t, lambda) == f_kt_form2(k, t, lambda));
            }
}

TEST_CASE("t=1 member is the constant 2k") {
    for (int k : {2, 5, 9})
        for (double lambda = k + 0.1; lambda < 2 * k; lambda += 0.7)
            CHECK(f_kt(k, 1, lambda) == doctest::Approx(2.0 * k).epsilon(1e-12));
}

TEST_CASE("optimal t formula") {
    CHECK(optimal_t(5, 6.0) == 5);          // ceil(2(10-6)) = 8, capped at k
    CHECK(optimal_t(5, 9.0) == 2);          // ceil(2(10-9)) = 2
    CHECK(optimal_t(10, 19.9) == 1);        // ceil(0.2) = 1
    CHECK(optimal_t(8, 14.51) == 3);        // ceil(2*1.49) = 3
}

TEST_CASE("conditional bound exponent") {
    CHECK(conditional_exponent(4, 3, 5.0) ==
          doctest::Approx(5.0 * 0.75 + 1 + 0.75).epsilon(1e-12));
}

TEST_CASE("applicability fences") {
    CHECK(applicable(BoundId::BMS, 5));
    CHECK_FALSE(applicable(BoundId::BMS, 4));
    CHECK(applicable(BoundId::BZCubic, 3));
    CHECK_FALSE(applicable(BoundId::BZCubic, 4));
    CHECK(applicable(BoundId::BZSquaresMin, 2));
    CHECK_FALSE(applicable(BoundId::BZSquaresMin, 3));
    CHECK_THROWS_AS(exponent_of(BoundId::BMS, 4, 6.0), std::domain_error);
    CHECK_THROWS_AS(exponent_of(BoundId::Zhao, 3, 3.0), std::domain_error);  // lambda = k
}

TEST_CASE("name round trip") {
    for (BoundId id : {BoundId::Trivial1, BoundId::Zhao, BoundId::BaierZhao,
                       BoundId::Halupczok, BoundId::Munsch, BoundId::BMS, BoundId::BZCubic,
                       BoundId::Thm1i, BoundId::Thm1ii, BoundId::Corollary})
        CHECK(bound_from_name(bound_name(id)) == id);
    CHECK_THROWS_AS(bound_from_name("nonsense"), std::invalid_argument);
}

TEST_CASE("k=4 window endpoints from the scan") {
    auto report = dominance_scan(4, challenger_bound(BoundId::Corollary, 4), 0.01);
    REQUIRE(report.beat_intervals.size() == 1);
    CHECK(report.beat_intervals[0].first == doctest::Approx(21.0 / 4).epsilon(1e-9));
    CHECK(report.beat_intervals[0].second == doctest::Approx(13.0 / 2).epsilon(1e-9));
    CHECK(report.beat_fraction == doctest::Approx(0.3125).epsilon(1e-9));
}

TEST_CASE("k=3 scan finds no improvement window") {
    auto report = dominance_scan(3, challenger_bound(BoundId::Corollary, 3), 0.01);
    CHECK(report.beat_intervals.empty());
    CHECK(report.beat_fraction == doctest::Approx(0.0));
}

TEST_CASE("crossover solver on two lines") {
    auto f = [](double x) { return 2 * x - 3; };
    auto g = [](double x) { return x; };
    CHECK(crossover(f, g, 0.0, 10.0) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK_THROWS_AS(crossover(f, g, 4.0, 10.0), std::domain_error);
}

TEST_CASE("reach of the family matches its closed form") {
    CHECK(lambda1_formula(5) == doctest::Approx(8.5).epsilon(1e-12));
    CHECK(lambda1_formula(16) == doctest::Approx(30.5).epsilon(1e-12));
    CHECK(lambda1_formula(100) == doctest::Approx(198.0).epsilon(1e-12));
}

TEST_CASE("claims pass for the published k values") {
    for (int k : {2, 3, 4, 5, 16}) {
        auto results = claims_check(k);
        CHECK(!results.empty());
        for (const auto& c : results) {
            INFO("k=", k, " claim=", c.name, " detail=", c.detail);
            CHECK(c.pass);
        }
    }
}
