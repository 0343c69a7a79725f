// rat.hpp -- exact rational numbers on 64-bit storage with overflow checks.
//
// All intermediates go through __int128; a result whose reduced numerator or
// denominator does not fit in int64 raises Error instead of wrapping.  The
// magnitudes in this project (group orders <= ~1.5e6, character degrees <= 22,
// denominators = powers of |A| <= 256^2) stay far below the limit.
#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "isocat/common.hpp"

namespace isocat {

struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1; // > 0, gcd(num, den) == 1

    Rat() = default;
    Rat(std::int64_t n) : num(n), den(1) {} // NOLINT: implicit by design
    Rat(std::int64_t n, std::int64_t d) { assign(n, d); }

    static Rat from128(__int128 n, __int128 d) {
        require(d != 0, "Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        Rat r;
        r.num = narrow(n, "Rat numerator overflow");
        r.den = narrow(d, "Rat denominator overflow");
        return r;
    }

    void assign(std::int64_t n, std::int64_t d) {
        *this = from128(n, d);
    }

    bool is_zero() const { return num == 0; }
    bool is_one() const { return num == 1 && den == 1; }
    bool is_integer() const { return den == 1; }

    Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return from128((__int128)a.num * b.den + (__int128)b.num * a.den,
                       (__int128)a.den * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from128((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        require(b.num != 0, "Rat: division by zero");
        return from128((__int128)a.num * b.den, (__int128)a.den * b.num);
    }
    Rat& operator+=(const Rat& b) { *this = *this + b; return *this; }
    Rat& operator-=(const Rat& b) { *this = *this - b; return *this; }
    Rat& operator*=(const Rat& b) { *this = *this * b; return *this; }
    Rat& operator/=(const Rat& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
        return os << r.str();
    }

private:
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) { __int128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }
    static std::int64_t narrow(__int128 v, const char* msg) {
        if (v > INT64_MAX || v < INT64_MIN) throw Error(msg);
        return (std::int64_t)v;
    }
};

} // namespace isocat
