#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace regtri {

// Exact rational on 64-bit integers, always normalized (den > 0, gcd = 1).
// The quantities in this project (Moon-Moser floors, corollary floors, audit
// slacks) stay far below the overflow range; intermediate products are
// carried in __int128 to be safe.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return from128(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return from128(i128(a.num) * b.den - i128(b.num) * a.den, i128(a.den) * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from128(i128(a.num) * b.num, i128(a.den) * b.den);
    }
    friend Rat operator-(const Rat& a) { return Rat(-a.num, a.den); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num) * b.den < i128(b.num) * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) {
        return i128(a.num) * b.den <= i128(b.num) * a.den;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

private:
    using i128 = __int128;

    static Rat from128(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 an = n < 0 ? -n : n;
        i128 g = gcd128(an, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational overflow");
        Rat r;
        r.num = static_cast<long long>(n);
        r.den = static_cast<long long>(d);
        if (r.num == 0) r.den = 1;
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b) { i128 t = a % b; a = b; b = t; }
        return a;
    }
};

}  // namespace regtri
