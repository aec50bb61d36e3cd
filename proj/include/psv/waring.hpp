#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace psv::waring {

/// R_{k,s}(n): ordered s-tuples of positive integers with n = n1^k + ... + ns^k.
std::int64_t rep_count(std::int64_t n, int k, int s);

/// R_{k,2}(n) by the divisor algorithm (k >= 3 odd); even k falls back to rep_count.
std::int64_t rep_count_two_divisor(std::int64_t n, int k);

/// Table of R_{k,s}(m) for m = 0..limit, by iterated convolution with the
/// k-th power indicator.
std::vector<std::int64_t> rep_count_table(std::int64_t limit, int k, int s);

/// (n*, max R_{k,s}(n*)) over n <= limit, ties broken by smallest n.
std::pair<std::int64_t, std::int64_t> sup_rep_count(std::int64_t limit, int k, int s,
                                                    int jobs = 1);

struct SingularSeriesValue {
    std::int64_t n = 0;
    int k = 0, s = 0, q_max = 0;
    double value = 0;           // real part of the partial sum over q <= q_max
    double imag_residue = 0;    // |imaginary part|, must be tiny
    double gamma_factor = 0;    // Gamma(1 + 1/k)^s / Gamma(s/k)
    std::vector<double> partials;  // partial sums after each q, for stability checks
};

/// Truncated Hardy-Littlewood singular series sum_{q<=q_max} A_q(n).
SingularSeriesValue singular_series(std::int64_t n, int k, int s, int q_max);

/// gamma_factor * singular_series * n^{s/k - 1}; requires s >= k + 1.
double hl_predicted_density(std::int64_t n, int k, int s, int q_max);

bool is_kth_power(std::int64_t m, int k);

}  // namespace psv::waring
