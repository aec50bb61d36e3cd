#include "psv/meanvalue.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace psv::meanvalue {

namespace {

void check_set(std::span<const std::int64_t> A) {
    if (A.empty()) throw std::invalid_argument("A must be nonempty");
    std::set<std::int64_t> seen(A.begin(), A.end());
    if (seen.size() != A.size() || *seen.begin() < 1)
        throw std::invalid_argument("A must consist of distinct positive integers");
}

i128 factorial(int n) {
    i128 f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Visits every multiset of size s from A, passing the value counts and the
/// multinomial weight (= number of ordered s-tuples with that multiset).
template <typename Fn>
void for_each_multiset(std::span<const std::int64_t> A, int s, Fn&& fn) {
    std::vector<int> counts(A.size(), 0);
    const i128 s_fact = factorial(s);
    auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
        if (idx + 1 == A.size()) {
            counts[idx] = remaining;
            i128 weight = s_fact;
            for (int c : counts) weight /= factorial(c);
            fn(counts, weight);
            return;
        }
        for (int c = 0; c <= remaining; ++c) {
            counts[idx] = c;
            self(self, idx + 1, remaining - c);
        }
    };
    rec(rec, 0, s);
}

i128 power_sum(std::span<const std::int64_t> A, const std::vector<int>& counts, int exp) {
    i128 total = 0;
    for (std::size_t i = 0; i < A.size(); ++i)
        if (counts[i] > 0)
            total = add_checked(total, mul_checked(i128(counts[i]), ipow_checked(A[i], exp)));
    return total;
}

i128 grouped_count(std::span<const std::int64_t> A, int s,
                   const std::vector<int>& exponents) {
    std::map<std::vector<i128>, i128> groups;
    for_each_multiset(A, s, [&](const std::vector<int>& counts, i128 weight) {
        std::vector<i128> key;
        key.reserve(exponents.size());
        for (int e : exponents) key.push_back(power_sum(A, counts, e));
        groups[key] += weight;
    });
    i128 total = 0;
    for (const auto& [key, w] : groups) total = add_checked(total, mul_checked(w, w));
    return total;
}

// Independent route: enumerate all ordered s-tuple sums and join by brute
// comparison. Only viable for |A|^{2s} <= 10^6.
i128 nested_join_count(std::span<const std::int64_t> A, int k, int s) {
    std::vector<i128> sums;
    std::vector<std::size_t> idx(std::size_t(s), 0);
    for (;;) {
        i128 total = 0;
        for (std::size_t j = 0; j < idx.size(); ++j)
            total += ipow_checked(A[idx[j]], k);
        sums.push_back(total);
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == A.size()) idx[pos++] = 0;
        if (pos == idx.size()) break;
    }
    i128 count = 0;
    for (i128 lhs : sums)
        for (i128 rhs : sums)
            if (lhs == rhs) ++count;
    return count;
}

}  // namespace

i128 mean_value_count(std::span<const std::int64_t> A, int k, int s) {
    check_set(A);
    if (k < 1 || s < 1) throw std::invalid_argument("k, s must be positive");
    i128 result = grouped_count(A, s, {k});
    double tuples = std::pow(double(A.size()), 2.0 * s);
    if (tuples <= 1e6 && nested_join_count(A, k, s) != result)
        throw std::logic_error("mean_value_count: grouped and nested routes disagree");
    return result;
}

i128 vinogradov_partial_count(std::span<const std::int64_t> A, int k, int t) {
    check_set(A);
    if (t < 1 || t > k) throw std::invalid_argument("t must satisfy 1 <= t <= k");
    const int s = t * (t + 1) / 2;
    std::vector<int> exponents;
    for (int j = 1; j <= t - 1; ++j) exponents.push_back(j);
    exponents.push_back(k);
    return grouped_count(A, s, exponents);
}

i128 inflation_cap(std::int64_t Q, int t) {
    const int s = t * (t + 1) / 2;
    i128 cap = 1;
    for (int j = 1; j <= t - 1; ++j)
        cap = mul_checked(cap, mul_checked(i128(s), ipow_checked(Q, j)));
    return cap;
}

FiberReport fiber_statistics(std::span<const std::int64_t> A, int k, int s, int t) {
    check_set(A);
    if (t < 1 || t > k) throw std::invalid_argument("t must satisfy 1 <= t <= k");
    // ell -> (lower power-sum key -> fiber size V)
    std::map<i128, std::map<std::vector<i128>, i128>> fibers;
    for_each_multiset(A, s, [&](const std::vector<int>& counts, i128 weight) {
        i128 ell = power_sum(A, counts, k);
        std::vector<i128> key;
        for (int j = 1; j <= t - 1; ++j) key.push_back(power_sum(A, counts, j));
        fibers[ell][key] += weight;
    });
    FiberReport report;
    for (const auto& [ell, fiber] : fibers) {
        FiberRow row;
        row.ell = ell;
        row.B = i128(fiber.size());
        for (const auto& [key, v] : fiber) {
            row.R += v;
            row.sumV2 = add_checked(row.sumV2, mul_checked(v, v));
        }
        if (mul_checked(row.R, row.R) > mul_checked(row.B, row.sumV2))
            throw std::logic_error("fiber_statistics: per-ell Cauchy-Schwarz violated");
        report.sum_R += row.R;
        report.sum_R2 = add_checked(report.sum_R2, mul_checked(row.R, row.R));
        report.max_B = std::max(report.max_B, row.B);
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace psv::meanvalue
