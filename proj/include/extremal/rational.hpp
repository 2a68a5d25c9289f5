#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace extremal {

/// Rational phase turn t, representing the unit complex number e^{2*pi*i*t}.
/// Always stored reduced with 0 <= num < den.
struct Turn {
    long long num = 0;
    long long den = 1;

    Turn() = default;
    Turn(long long p, long long q) {
        if (q == 0) throw std::invalid_argument("Turn: zero denominator");
        if (q < 0) { p = -p; q = -q; }
        p %= q;
        if (p < 0) p += q;
        long long g = std::gcd(p, q);
        num = p / g;
        den = q / g;
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_zero() const { return num == 0; }

    Turn operator+(const Turn& o) const {
        long long g = std::gcd(den, o.den);
        long long l = den / g * o.den;
        return Turn(num * (l / den) + o.num * (l / o.den), l);
    }
    Turn operator-(const Turn& o) const { return *this + (-o); }
    Turn operator-() const { return Turn(den - num, den); }

    bool operator==(const Turn& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Turn& o) const { return !(*this == o); }
    bool operator<(const Turn& o) const { return num * o.den < o.num * den; }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// Nonnegative rational magnitude.
struct Rational {
    long long num = 1;
    long long den = 1;

    Rational() = default;
    Rational(long long p, long long q) {
        if (q == 0) throw std::invalid_argument("Rational: zero denominator");
        if (q < 0) { p = -p; q = -q; }
        if (p < 0) throw std::invalid_argument("Rational: negative magnitude");
        long long g = p == 0 ? q : std::gcd(p, q);
        num = p / g;
        den = q / g;
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_one() const { return num == 1 && den == 1; }
    bool is_zero() const { return num == 0; }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace extremal
