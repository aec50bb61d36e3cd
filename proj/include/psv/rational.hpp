#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include "psv/int128.hpp"

namespace psv {

/// Exact rational on 128-bit integers, always reduced, denominator > 0.
/// All comparisons are by cross multiplication; callers keep magnitudes
/// inside the configured width (Q^{4k} must fit) or construction throws.
struct Rational {
    i128 num = 0;
    i128 den = 1;

    Rational() = default;
    Rational(i128 n, i128 d) : num(n), den(d) { normalize(); }
    explicit Rational(i128 n) : num(n), den(1) {}

    void normalize() {
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        i128 g = igcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_zero() const { return num == 0; }
    bool is_positive() const { return num > 0; }

    Rational operator+(const Rational& o) const {
        return {add_checked(mul_checked(num, o.den), mul_checked(o.num, den)),
                mul_checked(den, o.den)};
    }
    Rational operator-(const Rational& o) const {
        return {add_checked(mul_checked(num, o.den), -mul_checked(o.num, den)),
                mul_checked(den, o.den)};
    }
    Rational operator*(const Rational& o) const {
        return {mul_checked(num, o.num), mul_checked(den, o.den)};
    }
    Rational operator-() const {
        Rational r;
        r.num = -num;
        r.den = den;
        return r;
    }

    std::strong_ordering operator<=>(const Rational& o) const {
        i128 lhs = mul_checked(num, o.den);
        i128 rhs = mul_checked(o.num, den);
        return lhs <=> rhs;
    }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

    Rational abs() const {
        Rational r = *this;
        if (r.num < 0) r.num = -r.num;
        return r;
    }

    double to_double() const { return double(num) / double(den); }

    std::string str() const { return psv::to_string(num) + "/" + psv::to_string(den); }
};

/// Parses "p/q" or a bare integer "p".
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_i128(s));
    return Rational(parse_i128(s.substr(0, slash)), parse_i128(s.substr(slash + 1)));
}

/// Distance to the nearest integer for a value in (0, 1]: min(d, 1-d)
/// where d = |a - b| for a, b both in (0, 1].
inline Rational wrap_distance(const Rational& a, const Rational& b) {
    Rational d = (a - b).abs();
    Rational complement = Rational(1) - d;
    return d < complement ? d : complement;
}

}  // namespace psv
