#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace ordspace {

using Integer = mpz_class;

/// Exact rational in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}
    Rational(const Integer& value) : q_(value) {}
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses `a/b` or an integer, optionally signed.
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }
    const mpq_class& get_mpq() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Floor as an exact integer.
    Integer floor() const;

    /// Canonical text: `a/b`, or `a` when the denominator is 1.
    std::string to_string() const;

private:
    mpq_class q_;
};

/// Exact p^m for any integer m (m < 0 gives 1/p^{-m}).
Rational prime_power(std::uint64_t p, std::int64_t m);

bool is_prime(std::uint64_t p);

/// Parses an optionally signed decimal integer; throws syntax_error otherwise.
Integer parse_integer(std::string_view text);

} // namespace ordspace

template <>
struct std::hash<ordspace::Rational> {
    std::size_t operator()(const ordspace::Rational& r) const noexcept;
};
