#include "psv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <stdexcept>

#include "psv/atlas.hpp"
#include "psv/farey.hpp"
#include "psv/meanvalue.hpp"
#include "psv/sieve_operator.hpp"
#include "psv/waring.hpp"

namespace psv::verify {

namespace {

void add(VerifyReport& r, const std::string& name, bool pass, const std::string& detail = "") {
    r.checks.push_back({name, pass, detail});
}

/// R*_{k,s}(q): ordered s-tuples from the set whose k-th powers sum to q.
i128 rstar_count(const std::vector<std::int64_t>& set, int k, int s, i128 target) {
    if (s == 0) return target == 0 ? 1 : 0;
    i128 total = 0;
    for (std::int64_t v : set) {
        i128 p = ipow_checked(v, k);
        if (p <= target) total += rstar_count(set, k, s - 1, target - p);
    }
    return total;
}

struct RandomShortIntervalCase {
    std::int64_t x;
    int k;
    Rational delta;
    farey::PowerFraction alpha0;
};

std::vector<RandomShortIntervalCase> random_cases(int count, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<RandomShortIntervalCase> cases;
    while (int(cases.size()) < count) {
        std::int64_t x = 1 + std::int64_t(rng() % 12);
        int k = 1 + int(rng() % 3);
        // delta = j / (2 x^k m) <= 1/(2 x^k), the residue-class regime
        std::int64_t m = 1 + std::int64_t(rng() % 16);
        std::int64_t j = 1 + std::int64_t(rng() % m);
        Rational delta(j, 2 * ipow_checked(x, k) * m);
        auto set = farey::gen_dyadic_set(x, k);
        auto alpha0 = set.elems[rng() % set.size()];
        cases.push_back({x, k, delta, alpha0});
    }
    return cases;
}

VerifyReport verify_farey() {
    VerifyReport r{"farey", {}};

    {  // cardinality against independent phi computation
        bool ok = true;
        std::ostringstream d;
        for (int k = 1; k <= 3 && ok; ++k)
            for (std::int64_t Q = 1; Q <= 8; ++Q) {
                auto set = farey::gen_farey_set(Q, k);
                if (i128(set.size()) != farey::farey_cardinality(Q, k)) {
                    ok = false;
                    d << "mismatch at Q=" << Q << " k=" << k;
                    break;
                }
            }
        add(r, "cardinality_sum_qk1_phi", ok, d.str());
    }

    {  // exhaustive pairwise spacing >= 1/(q^k q'^k) >= Q^{-2k}
        bool ok = true;
        std::ostringstream d;
        for (int k = 1; k <= 3 && ok; ++k)
            for (std::int64_t Q = 2; Q <= 8 && ok; ++Q) {
                auto set = farey::gen_farey_set(Q, k);
                Rational global(1, ipow_checked(Q, 2 * k));
                for (std::size_t i = 0; i < set.size() && ok; ++i)
                    for (std::size_t j = i + 1; j < set.size(); ++j) {
                        const auto& a = set.elems[i];
                        const auto& b = set.elems[j];
                        Rational dist = wrap_distance(a.value(), b.value());
                        Rational pairwise(1, mul_checked(ipow_checked(a.q, k),
                                                         ipow_checked(b.q, k)));
                        if (dist < pairwise || dist < global) {
                            ok = false;
                            d << "violation at Q=" << Q << " k=" << k;
                            break;
                        }
                    }
            }
        add(r, "spacing_exhaustive_Q8_k3", ok, d.str());
    }

    {  // shorter randomized run of the residue-class inequalities
        bool inj_ok = true, closure_ok = true, bstar_ok = true, cs_ok = true;
        for (const auto& c : random_cases(100, 20240517)) {
            auto a_star = farey::gen_A_star(c.x, c.k, c.delta, c.alpha0.a, c.alpha0.q);
            farey::ShortIntervalQuery q{c.x, c.k, c.delta, c.alpha0};
            if (farey::short_interval_count(q) > std::int64_t(a_star.size())) inj_ok = false;
            for (int s = 1; s <= 3; ++s) {
                auto b_star = farey::gen_B_star(c.x, c.k, s, c.delta, c.alpha0.a, c.alpha0.q);
                // Minkowski closure: s-fold sums of k-th powers of A* land in B*
                std::vector<i128> sums{0};
                for (int j = 0; j < s; ++j) {
                    std::vector<i128> next;
                    for (i128 base : sums)
                        for (std::int64_t v : a_star)
                            next.push_back(base + ipow_checked(v, c.k));
                    sums = std::move(next);
                }
                for (i128 v : sums)
                    if (!std::binary_search(b_star.begin(), b_star.end(), std::int64_t(v)))
                        closure_ok = false;
                // explicit residue-count bound
                double window = double(s) * c.delta.to_double() *
                                double(ipow_checked(c.x, 2 * c.k));
                double cap = (2 * std::ceil(window) + 1) * (double(s) * std::pow(2.0, c.k) + 1);
                if (double(b_star.size()) > cap) bstar_ok = false;
                // Cauchy-Schwarz chain through R*
                i128 a_s = ipow_checked(i128(a_star.size()), s);
                i128 max_r = 0, sum_r2 = 0;
                for (std::int64_t qv : b_star) {
                    i128 rr = rstar_count(a_star, c.k, s, qv);
                    max_r = std::max(max_r, rr);
                    sum_r2 += rr * rr;
                }
                if (a_s > mul_checked(i128(b_star.size()), max_r)) cs_ok = false;
                if (mul_checked(a_s, a_s) > mul_checked(i128(b_star.size()), sum_r2))
                    cs_ok = false;
            }
        }
        add(r, "injection_count_le_A_star", inj_ok);
        add(r, "sumset_closure_in_B_star", closure_ok);
        add(r, "explicit_B_star_bound", bstar_ok);
        add(r, "cauchy_schwarz_chain", cs_ok);
    }
    return r;
}

VerifyReport verify_waring() {
    VerifyReport r{"waring", {}};

    {
        bool ok = true;
        for (int k : {3, 5})
            for (std::int64_t n = 1; n <= 3000; ++n)
                if (waring::rep_count_two_divisor(n, k) != waring::rep_count(n, k, 2))
                    ok = false;
        add(r, "divisor_algorithm_oracle_equality_n3000", ok);
    }

    {  // ordered pairs: count even unless n = 2 m^k
        bool ok = true;
        for (int k : {2, 3})
            for (std::int64_t n = 1; n <= 500; ++n) {
                std::int64_t c = waring::rep_count(n, k, 2);
                bool diagonal = n % 2 == 0 && waring::is_kth_power(n / 2, k);
                if ((c % 2 == 1) != diagonal) ok = false;
            }
        add(r, "s2_parity_unless_diagonal", ok);
    }

    {
        bool ok = waring::rep_count(3, 2, 4) == 0 && waring::rep_count(4, 2, 4) == 1 &&
                  waring::rep_count(1729, 3, 2) == 4;
        add(r, "monotone_support_and_taxicab", ok);
    }

    {  // empirical divisor-bound cap, recorded as a regression value
        bool ok = true;
        std::ostringstream d;
        for (int k : {3, 5}) {
            auto table = waring::rep_count_table(1000000, k, 2);
            std::int64_t mx = *std::max_element(table.begin(), table.end());
            d << "k=" << k << " max=" << mx << " ";
            if (mx > 64) ok = false;
        }
        add(r, "rk2_cap_64_up_to_1e6", ok, d.str());
    }

    {
        auto s1 = waring::singular_series(10, 3, 5, 1);
        auto s2 = waring::singular_series(17, 2, 6, 2);
        auto conv_a = waring::singular_series(1000, 2, 5, 50);
        auto conv_b = waring::singular_series(1000, 2, 5, 100);
        bool ok = std::abs(s1.value - 1.0) < 1e-12 && std::abs(s2.value - 1.0) < 1e-9 &&
                  std::abs(conv_a.value - conv_b.value) < 0.05 &&
                  conv_b.imag_residue < 1e-9;
        std::ostringstream d;
        d << "q1=" << s1.value << " q2(k=2)=" << s2.value
          << " |v100-v50|=" << std::abs(conv_a.value - conv_b.value);
        add(r, "singular_series_truncation", ok, d.str());
    }
    return r;
}

VerifyReport verify_meanvalue() {
    VerifyReport r{"meanvalue", {}};
    using meanvalue::mean_value_count;
    using meanvalue::vinogradov_partial_count;

    {
        std::vector<std::int64_t> a123{1, 2, 3}, a12{1, 2}, a1{1};
        bool ok = mean_value_count(a1, 2, 3) == 1 && mean_value_count(a12, 1, 1) == 2 &&
                  mean_value_count(a123, 2, 2) == 15 &&
                  vinogradov_partial_count(a12, 2, 2) == 20;
        add(r, "hand_examples", ok);
    }

    {  // |A|^s <= count <= |A|^{2s}, monotone in A, constraints only shrink
        bool ok = true;
        std::mt19937 rng(99);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<std::int64_t> A;
            for (std::int64_t v = 1; v <= 8; ++v)
                if (rng() % 2) A.push_back(v);
            if (A.empty()) A.push_back(1 + std::int64_t(rng() % 8));
            int k = 2 + int(rng() % 2), s = 1 + int(rng() % 3);
            i128 c = mean_value_count(A, k, s);
            i128 lo = ipow_checked(i128(A.size()), s);
            if (c < lo || c > mul_checked(lo, lo)) ok = false;
            std::vector<std::int64_t> bigger = A;
            if (bigger.size() < 8) {
                for (std::int64_t v = 1; v <= 9; ++v)
                    if (std::find(bigger.begin(), bigger.end(), v) == bigger.end()) {
                        bigger.push_back(v);
                        break;
                    }
                if (mean_value_count(bigger, k, s) < c) ok = false;
            }
            int t = std::min(2, k);
            if (vinogradov_partial_count(A, k, t) >
                mean_value_count(A, k, t * (t + 1) / 2))
                ok = false;
        }
        add(r, "count_bounds_and_monotonicity", ok);
    }

    {  // fiber identities and the explicit inflation chain
        bool ok = true;
        for (std::int64_t Q = 2; Q <= 12 && ok; Q += 2)
            for (int k = 2; k <= 4 && ok; ++k)
                for (int t = 1; t <= std::min(3, k); ++t) {
                    std::vector<std::int64_t> A;
                    for (std::int64_t v = 1; v <= Q; ++v) A.push_back(v);
                    int s = t * (t + 1) / 2;
                    auto rep = meanvalue::fiber_statistics(A, k, s, t);
                    i128 mvc = mean_value_count(A, k, s);
                    if (rep.sum_R != ipow_checked(i128(A.size()), s)) ok = false;
                    if (rep.sum_R2 != mvc) ok = false;
                    i128 vpc = vinogradov_partial_count(A, k, t);
                    if (mvc > mul_checked(rep.max_B, vpc)) ok = false;
                    if (mvc > mul_checked(meanvalue::inflation_cap(Q, t), vpc)) ok = false;
                }
        add(r, "fiber_identities_and_inflation", ok);
    }
    return r;
}

VerifyReport verify_sieve() {
    VerifyReport r{"sieve", {}};
    const double tol = 1e-6;

    {
        bool ok = true;
        std::ostringstream d;
        for (int k = 1; k <= 3 && ok; ++k)
            for (std::int64_t Q = 1; Q <= 4 && ok; ++Q)
                for (int N : {1, 2, 4, 8, 16}) {
                    auto rep = sieve::bound_sandwich_check(Q, k, N, tol);
                    if (!rep.pass) {
                        ok = false;
                        d << "sandwich failed at Q=" << Q << " k=" << k << " N=" << N;
                        break;
                    }
                }
        add(r, "sandwich_grid", ok, d.str());
    }

    {  // PSD + ratio bounded by lambda_max, 100 random complex sequences
        bool ok = true;
        std::mt19937 rng(7);
        std::normal_distribution<double> gauss(0.0, 1.0);
        auto est = sieve::delta_exact(3, 2, 12, 1e-9);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<std::complex<double>> z(12);
            for (auto& c : z) c = {gauss(rng), gauss(rng)};
            double ratio = sieve::sieve_ratio(z, 3, 2);
            if (ratio < -1e-9 || ratio > est.lambda_max * (1 + tol)) ok = false;
        }
        add(r, "psd_and_ratio_below_lambda", ok);
    }

    {  // quadratic form depends only on m - n: identical at two window offsets
        bool ok = true;
        std::mt19937 rng(11);
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::vector<std::complex<double>> z(10);
        for (auto& c : z) c = {gauss(rng), gauss(rng)};
        double r0 = sieve::sieve_ratio(z, 3, 2, 0);
        double r7 = sieve::sieve_ratio(z, 3, 2, 7);
        if (std::abs(r0 - r7) > 1e-9 * std::max(1.0, r0)) ok = false;
        add(r, "shift_invariance", ok);
    }

    {
        auto est = sieve::delta_exact(2, 2, 20, 1e-9);
        bool ok = est.lambda_max * (1 + tol) >= est.witness_spike &&
                  est.lambda_max * (1 + tol) >= 20 &&
                  est.witness_phase >= 20 * (1 - tol) &&
                  std::abs(est.witness_spike - 3.0) < 1e-12;
        add(r, "witness_consistency", ok);
    }
    return r;
}

VerifyReport verify_atlas() {
    VerifyReport r{"atlas", {}};

    for (int k : {2, 3, 4, 5, 16, 100}) {
        bool ok = true;
        std::ostringstream d;
        for (const auto& c : atlas::claims_check(k))
            if (!c.pass) {
                ok = false;
                d << c.name << " ";
            }
        add(r, "claims_k" + std::to_string(k), ok, d.str());
    }

    {  // optimal-t formula and breakpoint continuity, spot grid
        bool ok = true;
        for (int k : {3, 7, 20, 50}) {
            for (double lam = k + 0.01; lam < 2.0 * k; lam += 0.25)
                atlas::optimal_t(k, lam);  // throws if exhaustive search beats it
            for (int t = 1; t < k; ++t) {
                double star = 2.0 * k - t / 2.0;
                if (star <= k || star >= 2.0 * k) continue;
                if (std::abs(atlas::f_kt(k, t, star) - atlas::f_kt(k, t + 1, star)) > 1e-12)
                    ok = false;
            }
        }
        add(r, "optimal_t_and_continuity", ok);
    }

    {  // both printed forms of f_{k,t} agree in exact rational arithmetic
        bool ok = true;
        for (int k = 2; k <= 50 && ok; k += 3)
            for (int t = 1; t <= k && ok; ++t)
                for (i128 step = 0; step <= 100; step += 7) {
                    Rational lam(i128(k) * 100 + step, 100);  // k .. k+1 sampled
                    if (!(atlas::f_kt_form1(k, t, lam) == atlas::f_kt_form2(k, t, lam))) {
                        ok = false;
                        break;
                    }
                }
        add(r, "f_kt_forms_rational_identity", ok);
    }
    return r;
}

}  // namespace

VerifyReport verify_suite(const std::string& selector) {
    if (selector == "farey") return verify_farey();
    if (selector == "waring") return verify_waring();
    if (selector == "meanvalue") return verify_meanvalue();
    if (selector == "sieve") return verify_sieve();
    if (selector == "atlas") return verify_atlas();
    throw std::invalid_argument("unknown suite: " + selector);
}

std::vector<VerifyReport> verify_all() {
    return {verify_farey(), verify_waring(), verify_meanvalue(), verify_sieve(),
            verify_atlas()};
}

}  // namespace psv::verify
