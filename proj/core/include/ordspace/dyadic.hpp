#pragma once

#include "ordspace/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ordspace {

/// Exact dyadic rational mantissa / 2^exponent.
///
/// Canonical form: the mantissa is odd, or the value is zero with exponent 0.
/// Equal values therefore have identical fields, which the exact zero test in
/// linear_comb_sign relies on.
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(long value) : mantissa_(value) {}
    Dyadic(const Integer& value) : mantissa_(value) {}
    Dyadic(Integer mantissa, std::uint64_t exponent);

    /// Accepts `m/2^k`, `m/d` with d a power of two, or an integer.
    static Dyadic parse(std::string_view text);
    /// Fails with invalid_argument unless the denominator is a power of two.
    static Dyadic from_rational(const Rational& r);

    const Integer& mantissa() const { return mantissa_; }
    std::uint64_t exponent() const { return exponent_; }

    int sign() const { return sgn(mantissa_); }
    bool is_zero() const { return sgn(mantissa_) == 0; }
    bool is_integer() const { return exponent_ == 0; }

    Dyadic operator-() const;
    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
    Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
    Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }

    /// this * 2^e; e may be negative.
    Dyadic mul_pow2(std::int64_t e) const;

    Rational to_rational() const;

    friend bool operator==(const Dyadic&, const Dyadic&) = default;
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

    /// `m/2^k`, or the plain integer when k = 0.
    std::string to_string() const;

private:
    void normalize();

    Integer mantissa_{0};
    std::uint64_t exponent_ = 0;
};

struct FloorSplit {
    Integer whole;
    Dyadic fraction;
};

/// d = whole + fraction with 0 <= fraction < 1.
FloorSplit dyadic_floor_split(const Dyadic& d);

} // namespace ordspace
