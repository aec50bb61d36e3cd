#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace psv {

using i128 = __int128;

inline i128 mul_checked(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("128-bit multiply overflow");
    return r;
}

inline i128 add_checked(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("128-bit add overflow");
    return r;
}

/// base^exp with overflow rejection; exp >= 0.
inline i128 ipow_checked(i128 base, int exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    i128 r = 1;
    while (exp > 0) {
        if (exp & 1) r = mul_checked(r, base);
        exp >>= 1;
        if (exp > 0) base = mul_checked(base, base);
    }
    return r;
}

inline i128 iabs(i128 a) { return a < 0 ? -a : a; }

inline i128 igcd(i128 a, i128 b) {
    a = iabs(a);
    b = iabs(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::string to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string s;
    while (u > 0) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

inline i128 parse_i128(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer string");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("bad integer: " + s);
    i128 v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer: " + s);
        v = add_checked(mul_checked(v, 10), s[i] - '0');
    }
    return neg ? -v : v;
}

}  // namespace psv
