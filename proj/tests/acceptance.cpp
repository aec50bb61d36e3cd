// Acceptance gate: one line per criterion, nonzero exit if any gating
// criterion fails.  Criterion 9 is a diagnostic and never gates.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "psv/atlas.hpp"
#include "psv/farey.hpp"
#include "psv/meanvalue.hpp"
#include "psv/sieve_operator.hpp"
#include "psv/waring.hpp"
#include "support/jacobi.hpp"

using namespace psv;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void report(int idx, const char* label, bool pass, const std::string& detail,
            bool gating = true) {
    std::printf("criterion %d [%s] %s: %s%s\n", idx, pass ? "PASS" : "FAIL", label,
                detail.c_str(), gating ? "" : " (diagnostic, non-gating)");
    if (gating && !pass) ++failures;
}

// 1: eigenvalue sandwich over the full desk grid.
void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string worst;
    for (int k = 1; k <= 3; ++k)
        for (std::int64_t Q = 1; Q <= 4; ++Q)
            for (int N : {1, 2, 4, 8, 16, 32, 64}) {
                auto rep = sieve::bound_sandwich_check(Q, k, N, 1e-6);
                if (!rep.pass) {
                    ok = false;
                    worst = "Q=" + std::to_string(Q) + " k=" + std::to_string(k) +
                            " N=" + std::to_string(N);
                }
            }
    double el = seconds_since(t0);
    bool in_time = el < 60.0;
    report(1, "sandwich bounds", ok && in_time,
           (ok ? "84 grid points within tolerance 1e-6" : "violation at " + worst) +
               ", " + std::to_string(el) + "s");
}

// 2: power iteration against an independent dense eigensolver.
void criterion2() {
    bool ok = true;
    double worst = 0;
    for (int k = 1; k <= 3; ++k)
        for (std::int64_t Q = 2; Q <= 4; ++Q)
            for (int N : {3, 8, 17, 33, 64}) {
                auto gram = sieve::build_gram(Q, k, N);
                auto est = sieve::delta_exact(Q, k, N, 1e-12);
                double oracle = testsupport::jacobi_max_eigenvalue(gram.first_row);
                double rel = std::abs(est.lambda_max - oracle) / std::abs(oracle);
                worst = std::max(worst, rel);
                if (rel > 1e-8 || !est.converged) ok = false;
            }
    report(2, "eigensolver cross-check", ok,
           "max relative gap " + std::to_string(worst) + " (allowed 1e-8)");
}

// 3: exhaustive exact spacing.
void criterion3() {
    bool ok = true;
    long pairs = 0;
    for (int k = 1; k <= 3; ++k)
        for (std::int64_t Q = 1; Q <= 8; ++Q) {
            auto set = farey::gen_farey_set(Q, k);
            Rational floor(1, ipow_checked(Q, 2 * k));
            for (std::size_t i = 0; i < set.size(); ++i)
                for (std::size_t j = i + 1; j < set.size(); ++j) {
                    ++pairs;
                    if (wrap_distance(set.elems[i].value(), set.elems[j].value()) < floor)
                        ok = false;
                }
        }
    report(3, "exact pairwise spacing", ok,
           std::to_string(pairs) + " pairs checked against Q^{-2k}");
}

// 4: randomized residue-class injection and sumset closure.
void criterion4() {
    std::mt19937_64 rng(424242);
    bool ok = true;
    int cases = 0;
    std::string bad;
    while (cases < 500) {
        std::int64_t x = 2 + (std::int64_t)(rng() % 11);  // 2..12
        int k = 1 + (int)(rng() % 3);
        auto dyadic = farey::gen_dyadic_set(x, k);
        if (dyadic.size() == 0) continue;
        const auto& alpha0 = dyadic.elems[rng() % dyadic.size()];
        i128 xk = ipow_checked(x, k);
        std::int64_t m = 1 + (std::int64_t)(rng() % 8);
        std::int64_t j = 1 + (std::int64_t)(rng() % m);
        Rational delta(j, mul_checked(i128(2) * xk, i128(m)));  // <= 1/(2 x^k)
        ++cases;

        std::int64_t interval = farey::short_interval_count({x, k, delta, alpha0});
        auto a_star = farey::gen_A_star(x, k, delta, alpha0.a, alpha0.q);
        if (interval > (std::int64_t)a_star.size()) {
            ok = false;
            bad = "injection x=" + std::to_string(x);
        }

        for (int s = 1; s <= 3; ++s) {
            auto b_star = farey::gen_B_star(x, k, s, delta, alpha0.a, alpha0.q);
            // every s-fold sum of k-th powers of A* members must land in B*
            std::vector<i128> sums{0};
            for (int step = 0; step < s; ++step) {
                std::vector<i128> next;
                for (i128 base : sums)
                    for (std::int64_t q : a_star)
                        next.push_back(base + ipow_checked(q, k));
                sums = std::move(next);
            }
            for (i128 v : sums) {
                if (!std::binary_search(b_star.begin(), b_star.end(), (std::int64_t)v)) {
                    ok = false;
                    bad = "sumset x=" + std::to_string(x) + " s=" + std::to_string(s);
                }
            }
        }
    }
    report(4, "residue-class injection", ok,
           ok ? "500 randomized cases, injection and sumset closure hold"
              : "failure: " + bad);
}

// 5: the divisor algorithm reproduces direct enumeration.
void criterion5() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::int64_t bad_n = 0;
    int bad_k = 0;
    for (int k : {3, 5}) {
        auto table = waring::rep_count_table(200000, k, 2);
        for (std::int64_t n = 1; n <= 200000; ++n)
            if (waring::rep_count_two_divisor(n, k) != table[n]) {
                ok = false;
                bad_n = n;
                bad_k = k;
            }
    }
    double el = seconds_since(t0);
    bool in_time = el < 120.0;
    report(5, "divisor algorithm", ok && in_time,
           (ok ? "equal for all n <= 2e5, k in {3,5}"
               : "mismatch at n=" + std::to_string(bad_n) + " k=" + std::to_string(bad_k)) +
               ", " + std::to_string(el) + "s (limit 120)");
}

// 6: mean-value dual routes, fiber identity, inflation cap.
void criterion6() {
    bool ok = true;
    std::string bad;
    // dual-route equality is enforced inside mean_value_count (throws on
    // disagreement); fiber identity re-derives the same count independently.
    for (int mask = 1; mask < 256; ++mask) {
        std::vector<std::int64_t> A;
        for (int v = 0; v < 8; ++v)
            if (mask & (1 << v)) A.push_back(v + 1);
        if (A.size() > 5) continue;
        for (int k = 1; k <= 3; ++k)
            for (int s = 1; s <= 3; ++s) {
                i128 count;
                try {
                    count = meanvalue::mean_value_count(A, k, s);
                } catch (const std::exception& e) {
                    ok = false;
                    bad = e.what();
                    continue;
                }
                auto fib = meanvalue::fiber_statistics(A, k, s, std::min(2, k));
                if (fib.sum_R2 != count) {
                    ok = false;
                    bad = "fiber identity |A|=" + std::to_string(A.size());
                }
            }
    }
    for (std::int64_t Q = 2; Q <= 12; ++Q) {
        std::vector<std::int64_t> A;
        for (std::int64_t v = 1; v <= Q; ++v) A.push_back(v);
        for (int k = 2; k <= 4; ++k)
            for (int t = 2; t <= 3; ++t) {
                if (t >= k + 1) continue;  // lower keys must exclude exponent k
                int s = t * (t + 1) / 2;
                auto fib = meanvalue::fiber_statistics(A, k, s, t);
                if (fib.max_B > meanvalue::inflation_cap(Q, t)) {
                    ok = false;
                    bad = "inflation Q=" + std::to_string(Q) + " t=" + std::to_string(t);
                }
            }
    }
    report(6, "mean-value oracles", ok,
           ok ? "dual routes, fiber identity, and inflation cap all hold" : bad);
}

// 7: published exponent-comparison claims.
void criterion7() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string bad;
    for (int k : {2, 3, 4, 5, 16, 100})
        for (const auto& c : atlas::claims_check(k))
            if (!c.pass) {
                ok = false;
                bad = "k=" + std::to_string(k) + " " + c.name;
            }
    auto bms_cross = [&](int k, int t, double expected) {
        auto fam = atlas::challenger_thm2(k, t);
        auto bms = atlas::challenger_bound(atlas::BoundId::BMS, k);
        double got = atlas::crossover(fam.exponent, bms.exponent, k + 1e-6, 2.0 * k - 1e-6);
        if (std::abs(got - expected) > 1e-9) {
            ok = false;
            bad = "crossover k=" + std::to_string(k) + " t=" + std::to_string(t);
        }
    };
    for (int k = 5; k <= 15; ++k) bms_cross(k, 3, 2.0 * k - 3 + 6 / std::sqrt(k));
    for (int k = 16; k <= 99; ++k) bms_cross(k, 4, 2.0 * k - 7.0 / 3 + 10 / (3 * std::sqrt(k)));
    double el = seconds_since(t0);
    bool in_time = el < 10.0;
    report(7, "exponent atlas claims", ok && in_time,
           (ok ? "all claims within 1e-9" : bad) + ", " + std::to_string(el) +
               "s (limit 10)");
}

// 8: optimizer formula and continuity of the family envelope.
void criterion8() {
    bool ok = true;
    std::string bad;
    for (int k = 2; k <= 50; ++k) {
        for (double lambda = k + 0.01; lambda < 2.0 * k - 1e-12; lambda += 0.01) {
            try {
                atlas::optimal_t(k, lambda);  // throws if the formula is not optimal
            } catch (const std::exception& e) {
                ok = false;
                bad = e.what();
            }
        }
        for (int t = 1; t < k; ++t) {
            double star = 2.0 * k - t / 2.0;  // where the optimizer switches t <-> t+1
            double gap = std::abs(atlas::f_kt(k, t, star) - atlas::f_kt(k, t + 1, star));
            if (gap > 1e-12) {
                ok = false;
                bad = "discontinuity k=" + std::to_string(k) + " t=" + std::to_string(t);
            }
        }
    }
    report(8, "optimal t and envelope continuity", ok,
           ok ? "formula optimal and envelope continuous to 1e-12 for k <= 50" : bad);
}

// 9: loose density diagnostic for five squares (non-gating).
void criterion9() {
    auto table = waring::rep_count_table(2000, 2, 5);
    double sum = 0;
    int cnt = 0;
    for (std::int64_t n = 1000; n <= 2000; ++n) {
        double predicted = waring::hl_predicted_density(n, 2, 5, 50);
        if (predicted <= 0) continue;
        sum += table[n] / predicted;
        ++cnt;
    }
    double mean = sum / cnt;
    bool ok = mean >= 0.7 && mean <= 1.4;
    report(9, "density diagnostic", ok,
           "mean count/prediction ratio " + std::to_string(mean) + " over n in [1000,2000]",
           /*gating=*/false);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures) {
        std::printf("ACCEPTANCE: FAIL (%d criteria)\n", failures);
        return 1;
    }
    std::printf("ACCEPTANCE: PASS\n");
    return 0;
}
