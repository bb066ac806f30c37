#pragma once

#include <cassert>
#include <compare>
#include <numeric>
#include <string>

namespace clutterkit {

// Non-negative fraction kept in lowest terms, denominator always >= 1.
// Comparison cross-multiplies in 128 bits, so no overflow for any value
// this library produces (numerators and denominators stay far below 2^62).
class Rational {
public:
    Rational() = default;

    Rational(long long num, long long den) {
        assert(num >= 0 && den >= 1);
        long long g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    friend bool operator==(const Rational&, const Rational&) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

private:
    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace clutterkit
