#include "ordspace/group.hpp"

#include "ordspace/error.hpp"

#include <algorithm>
#include <set>

namespace ordspace {

void PElement::add(const PIndex& index, const Rational& coeff)
{
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(index, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

PElement PElement::operator-() const
{
    PElement out = *this;
    for (auto& [index, coeff] : out.terms_)
        coeff = -coeff;
    return out;
}

PElement& PElement::operator+=(const PElement& o)
{
    for (const auto& [index, coeff] : o.terms_)
        add(index, coeff);
    return *this;
}

PElement conj_p_by_lambda(const PElement& rho, const Dyadic& alpha, const std::vector<std::uint64_t>& primes)
{
    if (alpha.is_zero())
        return rho;
    PElement out;
    for (const auto& [index, coeff] : rho.terms()) {
        auto [m, x] = dyadic_floor_split(index.x + alpha.mul_pow2(index.z));
        if (!m.fits_slong_p())
            throw Error(ErrorCode::invalid_argument, "lambda action exponent too large: " + m.get_str());
        auto p = primes.at(static_cast<std::size_t>(index.i - 1));
        out.add(PIndex{index.i, index.z, x}, coeff * prime_power(p, m.get_si()));
    }
    return out;
}

PElement conj_p_by_zeta(const PElement& rho, std::int64_t beta)
{
    if (beta == 0)
        return rho;
    PElement out;
    for (const auto& [index, coeff] : rho.terms())
        out.add(PIndex{index.i, index.z + beta, index.x}, coeff);
    return out;
}

std::vector<std::uint64_t> first_primes(int count)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; static_cast<int>(out.size()) < count; ++p) {
        if (is_prime(p))
            out.push_back(p);
    }
    return out;
}

Group::Group(int n) : Group(n, n >= 2 ? first_primes(n) : std::vector<std::uint64_t>{}) {}

Group::Group(int n, std::vector<std::uint64_t> primes) : n_(n), primes_(std::move(primes))
{
    if (n < 2)
        throw Error(ErrorCode::arity_out_of_range, "n must be at least 2, got " + std::to_string(n));
    if (static_cast<int>(primes_.size()) != n)
        throw Error(ErrorCode::invalid_argument, "expected " + std::to_string(n) + " primes");
    std::set<std::uint64_t> seen;
    for (auto p : primes_) {
        if (!is_prime(p))
            throw Error(ErrorCode::invalid_argument, std::to_string(p) + " is not prime");
        if (!seen.insert(p).second)
            throw Error(ErrorCode::invalid_argument, "primes must be distinct");
    }
}

GroupElement Group::identity() const
{
    return GroupElement{n_, {}, Dyadic(0), 0};
}

GroupElement Group::gen_h(int i, std::int64_t z, const Dyadic& x, const Rational& r) const
{
    if (i < 1 || i > n_)
        throw Error(ErrorCode::index_out_of_range, "h index " + std::to_string(i) + " not in 1.." + std::to_string(n_));
    if (x.sign() < 0 || x >= Dyadic(1))
        throw Error(ErrorCode::x_out_of_range, "x = " + x.to_string() + " not in [0,1)");
    GroupElement g = identity();
    g.rho.add(PIndex{i, z, x}, r);
    return g;
}

GroupElement Group::gen_lambda(const Dyadic& a) const
{
    GroupElement g = identity();
    g.a = a;
    return g;
}

GroupElement Group::gen_zeta(std::int64_t b) const
{
    GroupElement g = identity();
    g.b = b;
    return g;
}

GroupElement Group::from_p(const PElement& rho) const
{
    GroupElement g = identity();
    g.rho = rho;
    check(g);
    return g;
}

void Group::check(const GroupElement& g) const
{
    if (g.n != n_)
        throw Error(ErrorCode::arity_mismatch, "element of G_" + std::to_string(g.n) + " used in G_" + std::to_string(n_));
    for (const auto& [index, coeff] : g.rho.terms()) {
        if (index.i < 1 || index.i > n_)
            throw Error(ErrorCode::index_out_of_range, "h index " + std::to_string(index.i));
        if (index.x.sign() < 0 || index.x >= Dyadic(1))
            throw Error(ErrorCode::x_out_of_range, "x = " + index.x.to_string());
    }
}

// (r1 L^a1 Z^b1)(r2 L^a2 Z^b2) = r1 * [L^a1 Z^b1 r2 Z^-b1 L^-a1] * L^(a1 + a2 2^b1) Z^(b1+b2)
GroupElement Group::multiply(const GroupElement& g1, const GroupElement& g2) const
{
    if (g1.n != n_ || g2.n != n_)
        throw Error(ErrorCode::arity_mismatch, "multiply: arities " + std::to_string(g1.n) + " and " + std::to_string(g2.n));
    GroupElement out{n_, g1.rho, g1.a + g2.a.mul_pow2(g1.b), g1.b + g2.b};
    out.rho += conj_p_by_lambda(conj_p_by_zeta(g2.rho, -g1.b), -g1.a, primes_);
    return out;
}

GroupElement Group::invert(const GroupElement& g) const
{
    if (g.n != n_)
        throw Error(ErrorCode::arity_mismatch, "invert: arity " + std::to_string(g.n));
    return GroupElement{n_, conj_p_by_zeta(conj_p_by_lambda(-g.rho, g.a, primes_), g.b), -g.a.mul_pow2(-g.b), -g.b};
}

GroupElement Group::conjugate(const GroupElement& g, const GroupElement& k) const
{
    return multiply(multiply(invert(k), g), k);
}

GroupElement Group::power(const GroupElement& g, std::int64_t e) const
{
    GroupElement base = e < 0 ? invert(g) : g;
    std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    GroupElement out = identity();
    while (k > 0) {
        if (k & 1)
            out = multiply(out, base);
        k >>= 1;
        if (k > 0)
            base = multiply(base, base);
    }
    return out;
}

} // namespace ordspace
