#include "ordspace/rational.hpp"

#include "ordspace/error.hpp"

#include <cctype>

namespace ordspace {

Integer parse_integer(std::string_view text)
{
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
        ++pos;
    if (pos == text.size())
        throw Error(ErrorCode::syntax_error, "expected integer, got '" + std::string(text) + "'");
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw Error(ErrorCode::syntax_error, "expected integer, got '" + std::string(text) + "'");
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return Integer(digits, 10);
}

Rational::Rational(const Integer& num, const Integer& den)
{
    if (sgn(den) == 0)
        throw Error(ErrorCode::invalid_argument, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    Integer den = parse_integer(text.substr(slash + 1));
    if (text.substr(slash + 1).starts_with('-') || text.substr(slash + 1).starts_with('+'))
        throw Error(ErrorCode::syntax_error, "signed denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(text.substr(0, slash)), den);
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw Error(ErrorCode::invalid_argument, "division by zero");
    q_ /= o.q_;
    return *this;
}

Integer Rational::floor() const
{
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
}

std::string Rational::to_string() const
{
    if (q_.get_den() == 1)
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational prime_power(std::uint64_t p, std::int64_t m)
{
    if (m == 0)
        return Rational(1);
    Integer base(static_cast<unsigned long>(p));
    Integer power;
    std::uint64_t e = m < 0 ? static_cast<std::uint64_t>(-(m + 1)) + 1 : static_cast<std::uint64_t>(m);
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), e);
    return m > 0 ? Rational(power) : Rational(Integer(1), power);
}

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0)
            return false;
    }
    return true;
}

} // namespace ordspace

std::size_t std::hash<ordspace::Rational>::operator()(const ordspace::Rational& r) const noexcept
{
    std::hash<std::string> h;
    return h(r.to_string());
}
