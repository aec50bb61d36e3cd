#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "psv/sieve_operator.hpp"
#include "support/jacobi.hpp"

using namespace psv::sieve;

TEST_CASE("first row for Q=2, k=2 is 1 + 2 cos(pi d / 2)") {
    auto gram = build_gram(2, 2, 6);
    REQUIRE(gram.first_row.size() == 6);
    CHECK(gram.set_size == 3);
    for (int d = 0; d < 6; ++d) {
        double expected = 1 + 2 * std::cos(std::numbers::pi * d / 2);
        CHECK(gram.first_row[d] == doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK(gram.imag_residue < 1e-9);
    CHECK(gram.first_row[0] == doctest::Approx(3.0));  // exactly |S_2(2)|
}

TEST_CASE("gram row is identical for any worker count") {
    auto a = build_gram(4, 2, 32, 1);
    auto b = build_gram(4, 2, 32, 4);
    for (int d = 0; d < 32; ++d) CHECK(a.first_row[d] == b.first_row[d]);
}

TEST_CASE("toeplitz matvec against a hand example") {
    std::vector<double> row{2, 1, 0};
    std::vector<double> x{1, 2, 3}, y(3);
    toeplitz_matvec(row, x, y);
    CHECK(y[0] == doctest::Approx(4));   // 2*1 + 1*2 + 0*3
    CHECK(y[1] == doctest::Approx(8));   // 1*1 + 2*2 + 1*3
    CHECK(y[2] == doctest::Approx(8));   // 0*1 + 1*2 + 2*3
}

TEST_CASE("window length one gives exactly the set size") {
    auto est = delta_exact(3, 2, 1, 1e-10);
    CHECK(est.lambda_max == doctest::Approx((double)build_gram(3, 2, 1).set_size));
}

TEST_CASE("power iteration matches the dense oracle") {
    for (std::int64_t Q : {2, 3}) {
        for (int N : {4, 16, 33}) {
            auto gram = build_gram(Q, 2, N);
            auto est = delta_exact(Q, 2, N, 1e-12);
            double oracle = testsupport::jacobi_max_eigenvalue(gram.first_row);
            CHECK(est.lambda_max ==
                  doctest::Approx(oracle).epsilon(1e-8));
            CHECK(est.converged);
        }
    }
}

TEST_CASE("sandwich at the documented point Q=2, k=2, N=20") {
    auto rep = bound_sandwich_check(2, 2, 20, 1e-6);
    CHECK(rep.lower == doctest::Approx(20.0));
    CHECK(rep.upper == doctest::Approx(35.0));
    CHECK(rep.pass);
}

TEST_CASE("witness ratios never exceed the top eigenvalue") {
    auto est = delta_exact(2, 2, 8, 1e-10);
    CHECK(est.witness_spike == doctest::Approx(3.0));
    CHECK(est.witness_spike <= est.lambda_max * (1 + 1e-9));
    CHECK(est.witness_phase >= 8.0 - 1e-9);
    CHECK(est.witness_phase <= est.lambda_max * (1 + 1e-9));
}

TEST_CASE("explicit sequences respect the operator norm") {
    auto est = delta_exact(3, 2, 6, 1e-10);
    std::vector<std::complex<double>> z{1., -2., 0.5, 0., 3., -1.};
    double ratio = sieve_ratio(z, 3, 2);
    CHECK(ratio <= est.lambda_max * (1 + 1e-9));
    CHECK(ratio >= 0);
}

TEST_CASE("ratio is invariant under shifting the window start") {
    std::vector<std::complex<double>> z{{1, 1}, {0.5, -2}, {3, 0}};
    double r0 = sieve_ratio(z, 3, 2, 0);
    double r7 = sieve_ratio(z, 3, 2, 7);
    CHECK(r0 == doctest::Approx(r7).epsilon(1e-9));
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(delta_exact(0, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(delta_exact(2, 2, 0), std::invalid_argument);
    std::vector<std::complex<double>> zero{0., 0.};
    CHECK_THROWS_AS(sieve_ratio(zero, 2, 2), std::invalid_argument);
}
