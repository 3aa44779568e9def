#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ringforge {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rat& q) { return rat_den(q) == 1; }

/// Nonnegative remainder of x mod m (m > 0).
inline Int mod_floor(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

inline Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct XgcdResult {
    Int g, x, y; // g = gcd(a,b) >= 0 and a*x + b*y = g
};

inline XgcdResult int_xgcd(const Int& a, const Int& b) {
    Int old_r = a, r = b;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        Int q = old_r / r; // truncated; correctness of the identity is unaffected
        Int t;
        t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * x; old_x = x; x = t;
        t = old_y - q * y; old_y = y; y = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    return {old_r, old_x, old_y};
}

inline Int int_pow(Int base, unsigned e) {
    Int r = 1;
    while (e > 0) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

/// 2^(-n) as an exact rational.
inline Rat pow2_inv(const Int& n) {
    if (n < 0) throw std::invalid_argument("pow2_inv: negative exponent");
    Int p = Int(1) << static_cast<unsigned>(n);
    return Rat(Int(1), p);
}

inline Int rat_floor(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int f = n / d;
    if (n < 0 && n % d != 0) f -= 1;
    return f;
}

inline Int rat_ceil(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int c = n / d;
    if (n > 0 && n % d != 0) c += 1;
    return c;
}

struct KindMismatch : std::invalid_argument {
    explicit KindMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct AmbiguousCancellation : std::domain_error {
    explicit AmbiguousCancellation(const std::string& what) : std::domain_error(what) {}
};

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"), pos(position) {}
};

} // namespace ringforge
