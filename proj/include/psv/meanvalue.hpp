#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "psv/int128.hpp"

namespace psv::meanvalue {

/// Number of 2s-tuples (m, n) from A^s x A^s with equal sums of k-th powers.
/// Grouped by power-sum value; cross-checked against a nested join on tiny
/// inputs (|A|^{2s} <= 10^6).
i128 mean_value_count(std::span<const std::int64_t> A, int k, int s);

/// Solutions of the partial Vinogradov system: equal power sums for
/// exponents 1, ..., t-1 and k, with s = t(t+1)/2 variables per side.
i128 vinogradov_partial_count(std::span<const std::int64_t> A, int k, int t);

struct FiberRow {
    i128 ell = 0;     // value of the k-th power sum
    i128 R = 0;       // number of s-tuples over this ell
    i128 B = 0;       // number of distinct lower power-sum keys in the fiber
    i128 sumV2 = 0;   // sum of squared fiber sizes
};

struct FiberReport {
    std::vector<FiberRow> rows;  // ascending in ell
    i128 sum_R = 0;              // = |A|^s
    i128 sum_R2 = 0;             // = mean_value_count(A, k, s)
    i128 max_B = 0;
};

/// Fiber decomposition of the s-tuples by k-th power sum and lower power
/// sums; verifies per-ell Cauchy-Schwarz R^2 <= |B| * sumV2.
FiberReport fiber_statistics(std::span<const std::int64_t> A, int k, int s, int t);

/// Explicit inflation cap: prod_{j=1}^{t-1} (s * Q^j) with s = t(t+1)/2.
i128 inflation_cap(std::int64_t Q, int t);

}  // namespace psv::meanvalue
