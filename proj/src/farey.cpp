#include "psv/farey.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace psv::farey {

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

i128 farey_cardinality(std::int64_t Q, int k) {
    i128 total = 0;
    for (std::int64_t q = 1; q <= Q; ++q)
        total = add_checked(total, mul_checked(ipow_checked(q, k - 1), euler_phi(q)));
    return total;
}

namespace {

// All comparisons downstream cross-multiply two denominators of size up to
// param^{2k}, so param^{4k} must fit in 128 bits.
void check_width(std::int64_t param, int k) {
    try {
        ipow_checked(param, 4 * k);
    } catch (const std::overflow_error&) {
        throw std::overflow_error("parameter exceeds exact-integer width: " +
                                  std::to_string(param) + "^{4k} overflows 128 bits");
    }
}

void append_denominator(std::vector<PowerFraction>& out, std::int64_t q, int k) {
    const i128 qk = ipow_checked(q, k);
    for (std::int64_t a = 1; i128(a) <= qk; ++a)
        if (std::gcd(a, q) == 1) out.push_back({a, q, k});
}

FareySet build(std::int64_t q_lo, std::int64_t q_hi, int k, FareySet::Mode mode,
               std::int64_t param) {
    if (param < 1 || k < 1) throw std::invalid_argument("parameters must be positive");
    check_width(param, k);
    FareySet set;
    set.k = k;
    set.mode = mode;
    set.param = param;
    for (std::int64_t q = q_lo; q <= q_hi; ++q) append_denominator(set.elems, q, k);
    std::sort(set.elems.begin(), set.elems.end(),
              [](const PowerFraction& l, const PowerFraction& r) {
                  return l.value() < r.value();
              });
    return set;
}

}  // namespace

FareySet gen_farey_set(std::int64_t Q, int k) {
    return build(1, Q, k, FareySet::Mode::Full, Q);
}

FareySet gen_dyadic_set(std::int64_t x, int k) {
    return build(x / 2 + 1, x, k, FareySet::Mode::Dyadic, x);
}

Rational min_spacing(const FareySet& set) {
    if (set.size() < 2) throw std::invalid_argument("min_spacing needs at least two elements");
    // Elements are sorted in (0, 1], so the minimum wrap distance is attained
    // either between adjacent elements or between the first and the last.
    Rational best = wrap_distance(set.elems.front().value(), set.elems.back().value());
    for (std::size_t i = 0; i + 1 < set.size(); ++i) {
        Rational d = wrap_distance(set.elems[i].value(), set.elems[i + 1].value());
        if (d < best) best = d;
    }
    return best;
}

std::int64_t short_interval_count(const ShortIntervalQuery& query) {
    if (!query.delta.is_positive()) throw std::invalid_argument("delta must be positive");
    Rational xk_inv(1, ipow_checked(query.x, query.k));
    if (xk_inv < query.delta) throw std::invalid_argument("delta must be <= x^{-k}");
    if (!(query.alpha0.q > query.x / 2 && query.alpha0.q <= query.x))
        throw std::invalid_argument("alpha0 outside the dyadic interval");
    const FareySet set = gen_dyadic_set(query.x, query.k);
    const Rational center = query.alpha0.value();
    std::int64_t count = 0;
    for (const auto& pf : set.elems)
        if (wrap_distance(pf.value(), center) < query.delta) ++count;
    return count;
}

namespace {

// Does some integer b with |b| < bound exist in the residue class r mod m?
// r is already reduced to [0, m); candidates are r and r - m.
bool residue_in_window(i128 r, i128 m, const Rational& bound) {
    Rational lo(r);
    Rational hi(m - r);
    return lo < bound || hi < bound;
}

}  // namespace

std::vector<std::int64_t> gen_A_star(std::int64_t x, int k, const Rational& delta,
                                     std::int64_t a0, std::int64_t q0) {
    if (std::gcd(a0, q0) != 1) throw std::invalid_argument("gcd(a0, q0) must be 1");
    if (!(q0 > x / 2 && q0 <= x)) throw std::invalid_argument("q0 outside (x/2, x]");
    check_width(x, k);
    Rational regime(1, 2 * ipow_checked(x, k));
    if (regime < delta) throw std::invalid_argument("delta must be <= 1/(2 x^k)");
    const i128 mod = ipow_checked(q0, k);
    const Rational window = delta * Rational(ipow_checked(x, 2 * k));
    std::vector<std::int64_t> result;
    for (std::int64_t q = x / 2 + 1; q <= x; ++q) {
        i128 r = mul_checked(i128(a0), ipow_checked(q, k)) % mod;
        if (residue_in_window(r, mod, window)) result.push_back(q);
    }
    return result;
}

std::vector<std::int64_t> gen_B_star(std::int64_t x, int k, int s, const Rational& delta,
                                     std::int64_t a0, std::int64_t q0) {
    if (s < 1) throw std::invalid_argument("s must be >= 1");
    if (std::gcd(a0, q0) != 1) throw std::invalid_argument("gcd(a0, q0) must be 1");
    if (!(q0 > x / 2 && q0 <= x)) throw std::invalid_argument("q0 outside (x/2, x]");
    check_width(x, k);
    const i128 mod = ipow_checked(q0, k);
    const i128 xk = ipow_checked(x, k);
    const Rational window = Rational(s) * delta * Rational(ipow_checked(x, 2 * k));
    // q ranges over (s (x/2)^k, s x^k]; the lower endpoint is the rational
    // s x^k / 2^k, so q qualifies iff q 2^k > s x^k.
    const i128 two_k = ipow_checked(2, k);
    const i128 upper = mul_checked(i128(s), xk);
    std::vector<std::int64_t> result;
    for (i128 q = 1; q <= upper; ++q) {
        if (mul_checked(q, two_k) <= upper) continue;
        i128 r = mul_checked(i128(a0), q) % mod;
        if (residue_in_window(r, mod, window)) result.push_back(std::int64_t(q));
    }
    return result;
}

}  // namespace psv::farey
