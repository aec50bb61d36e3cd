#pragma once

#include <cstdint>
#include <vector>

#include "psv/rational.hpp"

namespace psv::farey {

/// A reduced fraction a/q^k with gcd(a, q) = 1 and 1 <= a <= q^k.
struct PowerFraction {
    std::int64_t a = 1;
    std::int64_t q = 1;
    int k = 1;

    Rational value() const { return Rational(a, ipow_checked(q, k)); }
};

struct FareySet {
    enum class Mode { Full, Dyadic };
    int k = 1;
    Mode mode = Mode::Full;
    std::int64_t param = 1;  // Q in full mode, x in dyadic mode
    std::vector<PowerFraction> elems;  // strictly increasing by value

    std::size_t size() const { return elems.size(); }
};

struct ShortIntervalQuery {
    std::int64_t x = 1;
    int k = 1;
    Rational delta;           // 0 < delta <= x^{-k}
    PowerFraction alpha0;     // x/2 < q0 <= x
};

/// S_k(Q): all a/q^k with q <= Q, a <= q^k, gcd(a, q) = 1, sorted ascending.
FareySet gen_farey_set(std::int64_t Q, int k);

/// A_k(x): same fractions restricted to the dyadic interval x/2 < q <= x.
FareySet gen_dyadic_set(std::int64_t x, int k);

/// Minimum of ||alpha - beta|| over distinct pairs; throws on |set| < 2.
Rational min_spacing(const FareySet& set);

/// |A_k(x, delta, alpha0)| = #{alpha in A_k(x) : ||alpha - alpha0|| < delta}.
std::int64_t short_interval_count(const ShortIntervalQuery& query);

/// A*_k(x, delta, a0, q0): q in (x/2, x] such that a0 q^k is congruent mod
/// q0^k to some b with |b| < delta x^{2k}.
std::vector<std::int64_t> gen_A_star(std::int64_t x, int k, const Rational& delta,
                                     std::int64_t a0, std::int64_t q0);

/// B*_{k,s}(x, delta, a0, q0): q in (s(x/2)^k, s x^k] such that a0 q is
/// congruent mod q0^k to some b with |b| < s delta x^{2k}.
std::vector<std::int64_t> gen_B_star(std::int64_t x, int k, int s, const Rational& delta,
                                     std::int64_t a0, std::int64_t q0);

/// Sigma_{q<=Q} q^{k-1} phi(q), the exact cardinality of S_k(Q).
i128 farey_cardinality(std::int64_t Q, int k);

std::int64_t euler_phi(std::int64_t n);

}  // namespace psv::farey
