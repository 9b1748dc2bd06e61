#include "ordspace/dyadic.hpp"

#include "ordspace/error.hpp"

namespace ordspace {

Dyadic::Dyadic(Integer mantissa, std::uint64_t exponent) : mantissa_(std::move(mantissa)), exponent_(exponent)
{
    normalize();
}

void Dyadic::normalize()
{
    if (sgn(mantissa_) == 0) {
        exponent_ = 0;
        return;
    }
    if (exponent_ == 0)
        return;
    auto twos = static_cast<std::uint64_t>(mpz_scan1(mantissa_.get_mpz_t(), 0));
    auto shift = std::min(twos, exponent_);
    if (shift > 0) {
        mpz_fdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), shift);
        exponent_ -= shift;
    }
}

Dyadic Dyadic::from_rational(const Rational& r)
{
    Integer den = r.denominator();
    if (mpz_popcount(den.get_mpz_t()) != 1)
        throw Error(ErrorCode::invalid_argument, "not a dyadic rational: " + r.to_string());
    return Dyadic(r.numerator(), mpz_scan1(den.get_mpz_t(), 0));
}

Dyadic Dyadic::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Dyadic(parse_integer(text));
    auto den_text = text.substr(slash + 1);
    if (den_text.starts_with("2^")) {
        Integer k = parse_integer(den_text.substr(2));
        if (sgn(k) < 0 || !k.fits_ulong_p() || den_text.substr(2).starts_with('+'))
            throw Error(ErrorCode::syntax_error, "bad dyadic exponent in '" + std::string(text) + "'");
        return Dyadic(parse_integer(text.substr(0, slash)), k.get_ui());
    }
    try {
        return from_rational(Rational::parse(text));
    } catch (const Error& e) {
        throw Error(ErrorCode::syntax_error, "expected dyadic rational, got '" + std::string(text) + "'");
    }
}

Dyadic Dyadic::operator-() const
{
    Dyadic out = *this;
    out.mantissa_ = -out.mantissa_;
    return out;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b)
{
    std::uint64_t k = std::max(a.exponent_, b.exponent_);
    Integer ma, mb;
    mpz_mul_2exp(ma.get_mpz_t(), a.mantissa_.get_mpz_t(), k - a.exponent_);
    mpz_mul_2exp(mb.get_mpz_t(), b.mantissa_.get_mpz_t(), k - b.exponent_);
    return Dyadic(ma + mb, k);
}

Dyadic Dyadic::mul_pow2(std::int64_t e) const
{
    if (is_zero())
        return *this;
    if (e >= 0) {
        auto ue = static_cast<std::uint64_t>(e);
        if (ue <= exponent_)
            return Dyadic(mantissa_, exponent_ - ue);
        Integer m;
        mpz_mul_2exp(m.get_mpz_t(), mantissa_.get_mpz_t(), ue - exponent_);
        return Dyadic(m, 0);
    }
    return Dyadic(mantissa_, exponent_ + static_cast<std::uint64_t>(-e));
}

Rational Dyadic::to_rational() const
{
    Integer den;
    mpz_setbit(den.get_mpz_t(), exponent_);
    return Rational(mantissa_, den);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b)
{
    std::uint64_t k = std::max(a.exponent_, b.exponent_);
    Integer ma, mb;
    mpz_mul_2exp(ma.get_mpz_t(), a.mantissa_.get_mpz_t(), k - a.exponent_);
    mpz_mul_2exp(mb.get_mpz_t(), b.mantissa_.get_mpz_t(), k - b.exponent_);
    int c = cmp(ma, mb);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Dyadic::to_string() const
{
    if (exponent_ == 0)
        return mantissa_.get_str();
    return mantissa_.get_str() + "/2^" + std::to_string(exponent_);
}

FloorSplit dyadic_floor_split(const Dyadic& d)
{
    Integer whole;
    mpz_fdiv_q_2exp(whole.get_mpz_t(), d.mantissa().get_mpz_t(), d.exponent());
    return {whole, d - Dyadic(whole)};
}

} // namespace ordspace
