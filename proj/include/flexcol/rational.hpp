#pragma once

// Exact rational arithmetic on 64-bit integers. Charge values in the
// discharging rules are small fractions (thirds, quarters, twelfths), so a
// normalized int64 fraction is plenty; intermediates go through __int128 and
// overflow of the reduced result aborts rather than wrapping.

#include <cassert>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace flexcol {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    static Rational reduce128(__int128 n, __int128 d) {
        if (d == 0) throw std::invalid_argument("rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        assert(n <= INT64_MAX && n >= INT64_MIN && d <= INT64_MAX);
        Rational r;
        r.num = static_cast<std::int64_t>(n);
        r.den = static_cast<std::int64_t>(d);
        return r;
    }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return reduce128((__int128)x.num * y.den + (__int128)y.num * x.den,
                         (__int128)x.den * y.den);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return reduce128((__int128)x.num * y.den - (__int128)y.num * x.den,
                         (__int128)x.den * y.den);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return reduce128((__int128)x.num * y.num, (__int128)x.den * y.den);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num == 0) throw std::invalid_argument("rational: division by zero");
        return reduce128((__int128)x.num * y.den, (__int128)x.den * y.num);
    }
    Rational operator-() const { Rational r(*this); r.num = -r.num; return r; }
    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num == y.num && x.den == y.den;
    }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        __int128 l = (__int128)x.num * y.den, r = (__int128)y.num * x.den;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        std::ostringstream os;
        os << num;
        if (den != 1) os << '/' << den;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }
};

// Parses "a" or "a/b"; throws on malformed input.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    }
}

}  // namespace flexcol
