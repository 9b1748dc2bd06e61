#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond the value types.

#include "ordspace/descriptor.hpp"
#include "ordspace/exact_arith.hpp"
#include "ordspace/group.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

namespace oracle {

using ordspace::Dyadic;
using ordspace::GroupElement;
using ordspace::Integer;
using ordspace::Rational;
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;

inline Real to_real(const Rational& r)
{
    return Real(r.numerator().get_str()) / Real(r.denominator().get_str());
}

/// Sign of sum r_j p^x_j evaluated in 200-digit floating point; nullopt when
/// the value is too close to zero to call.
inline std::optional<int> real_sign(std::uint64_t p, const std::vector<ordspace::PowerTerm>& terms)
{
    Real sum = 0;
    Real scale = 0;
    for (const auto& t : terms) {
        Real v = to_real(t.coeff) * boost::multiprecision::pow(Real(p), to_real(t.exp.to_rational()));
        sum += v;
        scale += abs(v);
    }
    if (abs(sum) <= scale * Real("1e-150"))
        return std::nullopt;
    return sum > 0 ? 1 : -1;
}

// Words in the generators, reduced with the three defining relations only.

struct H {
    int i;
    std::int64_t z;
    Rational x;
    Rational r;
};
struct L {
    Rational a;
};
struct Z {
    std::int64_t b;
};
using Letter = std::variant<H, L, Z>;

inline Rational pow_int(std::uint64_t p, std::int64_t e)
{
    Rational out(1);
    Rational base(Integer(static_cast<unsigned long>(p)));
    for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k)
        out *= base;
    return e < 0 ? Rational(1) / out : out;
}

inline std::vector<Letter> to_word(const GroupElement& g)
{
    std::vector<Letter> w;
    for (const auto& [index, coeff] : g.rho.terms())
        w.push_back(H{index.i, index.z, index.x.to_rational(), coeff});
    if (!g.a.is_zero())
        w.push_back(L{g.a.to_rational()});
    if (g.b != 0)
        w.push_back(Z{g.b});
    return w;
}

/// Bubbles every L and Z to the right:
///   L^a h^{i,r}_{z,x} = h^{i,r p^m}_{z,x'} L^a   with x - a 2^z = m + x'
///   Z^b h_{z,x}      = h_{z-b,x} Z^b
///   Z^b L^a          = L^{a 2^b} Z^b
/// then collects coefficients.
inline GroupElement reduce(int n, const std::vector<std::uint64_t>& primes, std::vector<Letter> w)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            if (auto* l = std::get_if<L>(&w[k])) {
                if (auto* h = std::get_if<H>(&w[k + 1])) {
                    Rational t = h->x - l->a * pow_int(2, h->z);
                    Integer m = t.floor();
                    H moved{h->i, h->z, t - Rational(m), h->r * pow_int(primes[static_cast<std::size_t>(h->i - 1)], m.get_si())};
                    Letter keep = *l;
                    w[k] = moved;
                    w[k + 1] = keep;
                    changed = true;
                }
            } else if (auto* zl = std::get_if<Z>(&w[k])) {
                if (auto* h = std::get_if<H>(&w[k + 1])) {
                    H moved{h->i, h->z - zl->b, h->x, h->r};
                    Letter keep = *zl;
                    w[k] = moved;
                    w[k + 1] = keep;
                    changed = true;
                } else if (auto* l = std::get_if<L>(&w[k + 1])) {
                    L moved{l->a * pow_int(2, zl->b)};
                    Letter keep = *zl;
                    w[k] = moved;
                    w[k + 1] = keep;
                    changed = true;
                }
            }
        }
    }
    GroupElement g;
    g.n = n;
    Rational a(0);
    for (const auto& letter : w) {
        if (auto* h = std::get_if<H>(&letter))
            g.rho.add({h->i, h->z, Dyadic::from_rational(h->x)}, h->r);
        else if (auto* l = std::get_if<L>(&letter))
            a += l->a;
        else
            g.b += std::get<Z>(letter).b;
    }
    g.a = Dyadic::from_rational(a);
    return g;
}

inline GroupElement word_product(const ordspace::Group& group, const GroupElement& x, const GroupElement& y)
{
    auto w = to_word(x);
    auto v = to_word(y);
    w.insert(w.end(), v.begin(), v.end());
    return reduce(group.arity(), group.primes(), std::move(w));
}

/// The lexicographic order used to prove G_n orderable: zeta first, then
/// lambda, then the P-part with H^1 most significant and, inside H^i, the
/// least z deciding.
inline int lexicographic_sign(const ordspace::Group& group, const GroupElement& g)
{
    if (g.b != 0)
        return g.b > 0 ? 1 : -1;
    if (!g.a.is_zero())
        return g.a.sign();
    if (g.rho.empty())
        return 0;
    const auto& first = g.rho.terms().begin()->first; // map order: least i, then least z
    std::vector<ordspace::PowerTerm> slice;
    for (const auto& [index, coeff] : g.rho.terms()) {
        if (index.i == first.i && index.z == first.z)
            slice.push_back({coeff, index.x});
    }
    auto s = real_sign(group.prime(first.i), slice);
    return s ? *s : 2; // 2: undecided
}

/// Every descriptor of arity n with offsets in [-B, B], built from labellings
/// and full permutations rather than restricted growth strings.
inline std::set<ordspace::OrderDescriptor> brute_force_descriptors(int n, std::int64_t B)
{
    std::set<std::vector<std::vector<int>>> partitions;
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    while (true) {
        std::map<int, std::vector<int>> groups;
        for (int i = 1; i <= n; ++i)
            groups[label[static_cast<std::size_t>(i - 1)]].push_back(i);
        std::vector<std::vector<int>> p;
        for (auto& [k, v] : groups)
            p.push_back(v);
        std::sort(p.begin(), p.end());
        partitions.insert(p);
        std::size_t k = 0;
        while (k < label.size() && label[k] == n - 1)
            label[k++] = 0;
        if (k == label.size())
            break;
        ++label[k];
    }

    std::set<ordspace::OrderDescriptor> out;
    for (auto blocks : partitions) {
        std::sort(blocks.begin(), blocks.end());
        do {
            // chains: for each block, every ordering of its non-least members
            std::vector<std::vector<std::vector<int>>> chain_options;
            for (const auto& b : blocks) {
                std::vector<int> rest(b.begin() + 1, b.end());
                std::vector<std::vector<int>> opts;
                do
                    opts.push_back(rest);
                while (std::next_permutation(rest.begin(), rest.end()));
                chain_options.push_back(opts);
            }
            std::size_t pairs = 0;
            for (const auto& b : blocks)
                pairs += b.size() - 1;
            std::function<void(std::size_t, std::vector<std::vector<int>>&)> pick =
                [&](std::size_t at, std::vector<std::vector<int>>& chosen) {
                    if (at == blocks.size()) {
                        const std::size_t gamma_count = std::size_t{1} << (n + 2);
                        const std::size_t dir_count = std::size_t{1} << blocks.size();
                        std::size_t offset_count = 1;
                        for (std::size_t k = 0; k < pairs; ++k)
                            offset_count *= static_cast<std::size_t>(2 * B + 1);
                        for (std::size_t gm = 0; gm < gamma_count; ++gm)
                            for (std::size_t dm = 0; dm < dir_count; ++dm)
                                for (std::size_t om = 0; om < offset_count; ++om) {
                                    ordspace::OrderDescriptor d;
                                    d.n = n;
                                    for (int k = 0; k < n + 2; ++k)
                                        d.gamma.push_back((gm >> k) & 1);
                                    d.blocks = blocks;
                                    for (std::size_t k = 0; k < blocks.size(); ++k)
                                        d.directions.push_back((dm >> k) & 1);
                                    std::size_t code = om;
                                    for (const auto& chain : chosen) {
                                        std::vector<ordspace::MixPair> ps;
                                        for (int i : chain) {
                                            const auto off = static_cast<std::int64_t>(code % static_cast<std::size_t>(2 * B + 1)) - B;
                                            code /= static_cast<std::size_t>(2 * B + 1);
                                            ps.push_back({i, off});
                                        }
                                        d.mixing.push_back(ps);
                                    }
                                    out.insert(d);
                                }
                        return;
                    }
                    for (const auto& opt : chain_options[at]) {
                        chosen.push_back(opt);
                        pick(at + 1, chosen);
                        chosen.pop_back();
                    }
                };
            std::vector<std::vector<int>> chosen;
            pick(0, chosen);
        } while (std::next_permutation(blocks.begin(), blocks.end()));
    }
    return out;
}

/// Naive derivative on the full list of shapes: a shape survives a stage when
/// some surviving shape has a strictly coarser partition.
inline std::map<ordspace::MixShape, int> naive_shape_ranks(const std::vector<ordspace::MixShape>& shapes, int& space_rank)
{
    auto coarser = [](const ordspace::MixShape& fine, const ordspace::MixShape& coarse) {
        if (coarse.blocks.size() >= fine.blocks.size())
            return false;
        for (const auto& fb : fine.blocks) {
            bool inside = false;
            for (const auto& cb : coarse.blocks)
                inside = inside || std::includes(cb.begin(), cb.end(), fb.begin(), fb.end());
            if (!inside)
                return false;
        }
        return true;
    };
    std::map<ordspace::MixShape, int> rank;
    std::vector<ordspace::MixShape> alive = shapes;
    int stage = 0;
    while (!alive.empty()) {
        std::vector<ordspace::MixShape> next;
        for (const auto& s : alive) {
            bool limit = false;
            for (const auto& t : alive)
                limit = limit || coarser(s, t);
            if (limit)
                next.push_back(s);
            else
                rank[s] = stage;
        }
        alive = std::move(next);
        ++stage;
    }
    space_rank = stage;
    return rank;
}

} // namespace oracle
