#include "psv/waring.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "psv/int128.hpp"

namespace psv::waring {

namespace {

// Integer k-th root by float seed plus correction.
std::int64_t kth_root_floor(std::int64_t m, int k) {
    if (m <= 0) return 0;
    auto r = std::int64_t(std::llround(std::pow(double(m), 1.0 / k)));
    while (r > 0 && ipow_checked(r, k) > m) --r;
    while (ipow_checked(r + 1, k) <= m) ++r;
    return r;
}

void check_args(std::int64_t n, int k, int s) {
    if (n < 1 || k < 1 || s < 1) throw std::invalid_argument("n, k, s must be positive");
}

std::int64_t rep2_direct(std::int64_t n, int k) {
    std::int64_t count = 0;
    for (std::int64_t a = 1;; ++a) {
        i128 ak = ipow_checked(a, k);
        if (ak >= n) break;
        if (is_kth_power(n - std::int64_t(ak), k)) ++count;
    }
    return count;
}

}  // namespace

bool is_kth_power(std::int64_t m, int k) {
    if (m < 1) return false;
    std::int64_t r = kth_root_floor(m, k);
    return ipow_checked(r, k) == m;
}

std::vector<std::int64_t> rep_count_table(std::int64_t limit, int k, int s) {
    if (limit < 0 || k < 1 || s < 1) throw std::invalid_argument("bad table parameters");
    std::vector<std::int64_t> powers;
    for (std::int64_t a = 1; ipow_checked(a, k) <= limit; ++a)
        powers.push_back(std::int64_t(ipow_checked(a, k)));
    std::vector<std::int64_t> cur(std::size_t(limit) + 1, 0);
    cur[0] = 1;  // empty sum
    for (int j = 0; j < s; ++j) {
        std::vector<std::int64_t> next(std::size_t(limit) + 1, 0);
        for (std::int64_t m = 1; m <= limit; ++m) {
            std::int64_t acc = 0;
            for (std::int64_t p : powers) {
                if (p > m) break;
                acc += cur[std::size_t(m - p)];
            }
            next[std::size_t(m)] = acc;
        }
        cur = std::move(next);
    }
    return cur;
}

std::int64_t rep_count(std::int64_t n, int k, int s) {
    check_args(n, k, s);
    if (n < s) return 0;
    if (s == 1) return is_kth_power(n, k) ? 1 : 0;
    if (s == 2) return rep2_direct(n, k);
    if (s == 3) {
        std::int64_t count = 0;
        for (std::int64_t a = 1;; ++a) {
            i128 ak = ipow_checked(a, k);
            if (ak > n - 2) break;
            count += rep2_direct(n - std::int64_t(ak), k);
        }
        return count;
    }
    // Meet in the middle: group sums of s/2 powers by value, join by key.
    const int h1 = s / 2, h2 = s - h1;
    auto left = rep_count_table(n - h2, k, h1);
    auto right = rep_count_table(n - h1, k, h2);
    std::int64_t total = 0;
    for (std::int64_t v = h1; v <= n - h2; ++v)
        total += left[std::size_t(v)] * right[std::size_t(n - v)];
    return total;
}

std::int64_t rep_count_two_divisor(std::int64_t n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("n, k must be positive");
    if (k < 3 || k % 2 == 0) return rep_count(n, k, 2);
    // a^k + b^k = n forces d = a + b to divide n, with a | d^k - n and both
    // a, b <= n^{1/k}, hence d <= 2 n^{1/k}.
    const std::int64_t d_cap = 2 * kth_root_floor(n, k);
    std::int64_t count = 0;
    for (std::int64_t d = 2; d <= d_cap; ++d) {
        if (n % d != 0) continue;
        i128 dk = ipow_checked(d, k);
        if (dk <= n) continue;
        i128 rem = dk - n;
        for (std::int64_t a = 1; a < d; ++a) {
            if (rem % a != 0) continue;
            std::int64_t b = d - a;
            if (ipow_checked(a, k) + ipow_checked(b, k) == n) ++count;
        }
    }
    return count;
}

std::pair<std::int64_t, std::int64_t> sup_rep_count(std::int64_t limit, int k, int s,
                                                    int jobs) {
    if (limit < 1) throw std::invalid_argument("limit must be >= 1");
    if (jobs < 1) jobs = 1;
    const auto table = rep_count_table(limit, k, s);
    // Per-chunk argmax, merged in index order, keeps the smallest-n tie-break
    // independent of the worker count.
    const int workers = int(std::min<std::int64_t>(jobs, limit));
    std::vector<std::pair<std::int64_t, std::int64_t>> best(std::size_t(workers), {1, -1});
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            std::int64_t lo = 1 + w * limit / workers;
            std::int64_t hi = (w + 1) * limit / workers;
            std::pair<std::int64_t, std::int64_t> b{lo, -1};
            for (std::int64_t n = lo; n <= hi; ++n)
                if (table[std::size_t(n)] > b.second) b = {n, table[std::size_t(n)]};
            best[std::size_t(w)] = b;
        });
    }
    for (auto& t : pool) t.join();
    std::pair<std::int64_t, std::int64_t> result{1, -1};
    for (const auto& b : best)
        if (b.second > result.second) result = b;
    return result;
}

SingularSeriesValue singular_series(std::int64_t n, int k, int s, int q_max) {
    check_args(n, k, s);
    if (q_max < 1) throw std::invalid_argument("q_max must be >= 1");
    const double two_pi = 2.0 * std::acos(-1.0);
    std::complex<double> total(0, 0), comp(0, 0);  // Kahan compensation
    SingularSeriesValue out;
    out.n = n;
    out.k = k;
    out.s = s;
    out.q_max = q_max;
    for (int q = 1; q <= q_max; ++q) {
        std::vector<int> pw((std::size_t)q);
        for (int r = 1; r <= q; ++r) {
            i128 rk = ipow_checked(r, k) % q;
            pw[std::size_t(r - 1)] = int(rk);
        }
        std::complex<double> term(0, 0);
        for (int a = 1; a <= q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            std::complex<double> gauss(0, 0);
            for (int r = 1; r <= q; ++r) {
                int m = int((std::int64_t(a) * pw[std::size_t(r - 1)]) % q);
                gauss += std::polar(1.0, two_pi * m / q);
            }
            std::complex<double> pw_s(1, 0);
            std::complex<double> base = gauss / double(q);
            for (int j = 0; j < s; ++j) pw_s *= base;
            int m0 = int(((n % q) * a) % q);
            term += pw_s * std::polar(1.0, -two_pi * m0 / q);
        }
        std::complex<double> y = term - comp;
        std::complex<double> t = total + y;
        comp = (t - total) - y;
        total = t;
        out.partials.push_back(total.real());
    }
    out.value = total.real();
    out.imag_residue = std::abs(total.imag());
    out.gamma_factor = std::pow(std::tgamma(1.0 + 1.0 / k), s) / std::tgamma(double(s) / k);
    return out;
}

double hl_predicted_density(std::int64_t n, int k, int s, int q_max) {
    if (s < k + 1) throw std::invalid_argument("hl_predicted_density requires s >= k + 1");
    SingularSeriesValue ss = singular_series(n, k, s, q_max);
    return ss.gamma_factor * ss.value * std::pow(double(n), double(s) / k - 1.0);
}

}  // namespace psv::waring
