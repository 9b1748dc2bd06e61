#pragma once

#include "ordspace/dyadic.hpp"
#include "ordspace/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

namespace ordspace {

/// Basis coordinate (i, z, x) of P_n: the copy of Q generated by h^i_{z,x}.
struct PIndex {
    int i = 1;
    std::int64_t z = 0;
    Dyadic x; // 0 <= x < 1

    friend bool operator==(const PIndex&, const PIndex&) = default;
    friend std::strong_ordering operator<=>(const PIndex&, const PIndex&) = default;
};

/// Element of the abelian group P_n = H^1 x ... x H^n, written additively as a
/// finite map from basis coordinates to nonzero rational coefficients.
class PElement {
public:
    using Map = std::map<PIndex, Rational>;

    PElement() = default;
    PElement(const PIndex& index, const Rational& coeff) { add(index, coeff); }

    const Map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const PIndex& index, const Rational& coeff);
    PElement operator-() const;
    PElement& operator+=(const PElement& o);
    friend PElement operator+(PElement a, const PElement& b) { return a += b; }

    friend bool operator==(const PElement&, const PElement&) = default;

private:
    Map terms_;
};

/// Normal form rho * lambda^a * zeta^b of G_n.
struct GroupElement {
    int n = 2;
    PElement rho;
    Dyadic a;
    std::int64_t b = 0;

    bool is_identity() const { return rho.empty() && a.is_zero() && b == 0; }
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// lambda^{-alpha} rho lambda^{alpha}: each h^{i,r}_{z,x} goes to
/// h^{i, r p_i^m}_{z, x'} where x + alpha 2^z = m + x', 0 <= x' < 1.
/// primes[i-1] is p_i.
PElement conj_p_by_lambda(const PElement& rho, const Dyadic& alpha, const std::vector<std::uint64_t>& primes);

/// zeta^{-beta} rho zeta^{beta}: shifts every z by beta.
PElement conj_p_by_zeta(const PElement& rho, std::int64_t beta);

/// The group G_n = (P_n x| A) x| Z for a fixed arity and choice of primes.
class Group {
public:
    /// Uses the first n primes.
    explicit Group(int n);
    Group(int n, std::vector<std::uint64_t> primes);

    int arity() const { return n_; }
    const std::vector<std::uint64_t>& primes() const { return primes_; }
    std::uint64_t prime(int i) const { return primes_.at(static_cast<std::size_t>(i - 1)); }

    GroupElement identity() const;
    GroupElement gen_h(int i, std::int64_t z, const Dyadic& x, const Rational& r = Rational(1)) const;
    GroupElement gen_lambda(const Dyadic& a) const;
    GroupElement gen_zeta(std::int64_t b) const;
    GroupElement from_p(const PElement& rho) const;

    GroupElement multiply(const GroupElement& g1, const GroupElement& g2) const;
    GroupElement invert(const GroupElement& g) const;
    /// k^{-1} g k
    GroupElement conjugate(const GroupElement& g, const GroupElement& k) const;
    GroupElement power(const GroupElement& g, std::int64_t e) const;

    /// Throws arity_mismatch / index_out_of_range / x_out_of_range when g does
    /// not belong to this group.
    void check(const GroupElement& g) const;

private:
    int n_;
    std::vector<std::uint64_t> primes_;
};

std::vector<std::uint64_t> first_primes(int count);

} // namespace ordspace
