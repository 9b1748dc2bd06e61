#include "ordspace/oracle.hpp"

#include "ordspace/error.hpp"

namespace ordspace {

std::string ArchClass::to_string() const
{
    switch (kind) {
    case Kind::identity: return "Identity";
    case Kind::lambda: return "Lambda";
    case Kind::zeta: return "Zeta";
    case Kind::p: return "P(" + std::to_string(i) + "," + std::to_string(z) + ")";
    }
    return "?";
}

std::string_view to_string(Comparison c)
{
    switch (c) {
    case Comparison::less: return "less";
    case Comparison::equal: return "equal";
    case Comparison::greater: return "greater";
    }
    return "?";
}

std::string_view to_string(ArchComparison c)
{
    switch (c) {
    case ArchComparison::much_less: return "muchLess";
    case ArchComparison::equivalent: return "equivalent";
    case ArchComparison::much_greater: return "muchGreater";
    }
    return "?";
}

OrderOracle::OrderOracle(Group group, OrderDescriptor descriptor, SignOptions options)
    : group_(std::move(group)), descriptor_(std::move(descriptor)), options_(options)
{
    require_valid(descriptor_);
    if (descriptor_.n != group_.arity())
        throw Error(ErrorCode::arity_mismatch,
                    "descriptor for n = " + std::to_string(descriptor_.n) + " used with G_" + std::to_string(group_.arity()));
    info_.assign(static_cast<std::size_t>(descriptor_.n), IndexInfo{});
    for (std::size_t b = 0; b < descriptor_.blocks.size(); ++b) {
        const bool positive = descriptor_.directions[b];
        const auto pos = static_cast<std::int64_t>(b);
        info_[static_cast<std::size_t>(descriptor_.blocks[b].front() - 1)] = {pos, 0, 0, positive};
        const auto& pairs = descriptor_.mixing[b];
        for (std::size_t j = 0; j < pairs.size(); ++j)
            info_[static_cast<std::size_t>(pairs[j].index - 1)] = {pos, static_cast<std::int64_t>(j) + 1, pairs[j].offset, positive};
    }
}

IndexKey OrderOracle::index_key(int i, std::int64_t z) const
{
    if (i < 1 || i > descriptor_.n)
        throw Error(ErrorCode::index_out_of_range, "index " + std::to_string(i) + " not in 1.." + std::to_string(descriptor_.n));
    const IndexInfo& info = info_[static_cast<std::size_t>(i - 1)];
    return {info.block_position, info.positive ? z - info.offset : info.offset - z, info.chain_position};
}

namespace {

// Iterator range of one (i, z) slice of the support.
struct Dominant {
    PElement::Map::const_iterator begin, end;
};

} // namespace

Sign OrderOracle::sign_of(const GroupElement& g) const
{
    group_.check(g);
    const auto& gamma = descriptor_.gamma;
    const auto n = static_cast<std::size_t>(descriptor_.n);
    if (g.b != 0)
        return gamma[n + 1] ? sign_of_int(g.b) : sign_of_int(-g.b);
    if (!g.a.is_zero())
        return gamma[n] ? sign_of_int(g.a.sign()) : sign_of_int(-g.a.sign());
    if (g.rho.empty())
        return Sign::zero;

    const auto& terms = g.rho.terms();
    Dominant best{terms.end(), terms.end()};
    IndexKey best_key{};
    for (auto it = terms.begin(); it != terms.end();) {
        auto slice_end = it;
        while (slice_end != terms.end() && slice_end->first.i == it->first.i && slice_end->first.z == it->first.z)
            ++slice_end;
        IndexKey key = index_key(it->first.i, it->first.z);
        if (best.begin == terms.end() || key > best_key) {
            best = {it, slice_end};
            best_key = key;
        }
        it = slice_end;
    }

    const int i = best.begin->first.i;
    std::vector<PowerTerm> slice;
    for (auto it = best.begin; it != best.end; ++it)
        slice.push_back({it->second, it->first.x});
    Sign s = linear_comb_sign(group_.prime(i), slice, options_);
    return gamma[static_cast<std::size_t>(i - 1)] ? s : -s;
}

Comparison OrderOracle::compare(const GroupElement& g, const GroupElement& h) const
{
    switch (sign_of(group_.multiply(group_.invert(g), h))) {
    case Sign::positive: return Comparison::less;
    case Sign::negative: return Comparison::greater;
    case Sign::zero: break;
    }
    return Comparison::equal;
}

ArchClass OrderOracle::arch_class(const GroupElement& g) const
{
    group_.check(g);
    if (g.b != 0)
        return {ArchClass::Kind::zeta};
    if (!g.a.is_zero())
        return {ArchClass::Kind::lambda};
    if (g.rho.empty())
        return {ArchClass::Kind::identity};
    bool found = false;
    IndexKey best_key{};
    ArchClass best{ArchClass::Kind::p};
    for (const auto& [index, coeff] : g.rho.terms()) {
        IndexKey key = index_key(index.i, index.z);
        if (!found || key > best_key) {
            found = true;
            best_key = key;
            best.i = index.i;
            best.z = index.z;
        }
    }
    return best;
}

int OrderOracle::compare_classes(const ArchClass& a, const ArchClass& b) const
{
    auto rank = [](ArchClass::Kind k) {
        switch (k) {
        case ArchClass::Kind::identity: return 0;
        case ArchClass::Kind::p: return 1;
        case ArchClass::Kind::lambda: return 2;
        case ArchClass::Kind::zeta: return 3;
        }
        return 0;
    };
    if (rank(a.kind) != rank(b.kind))
        return rank(a.kind) < rank(b.kind) ? -1 : 1;
    if (a.kind != ArchClass::Kind::p)
        return 0;
    auto ka = index_key(a.i, a.z);
    auto kb = index_key(b.i, b.z);
    return ka < kb ? -1 : (kb < ka ? 1 : 0);
}

ArchComparison OrderOracle::arch_compare(const GroupElement& g, const GroupElement& h) const
{
    int c = compare_classes(arch_class(g), arch_class(h));
    return c < 0 ? ArchComparison::much_less : (c > 0 ? ArchComparison::much_greater : ArchComparison::equivalent);
}

GroupElement OrderOracle::abs(const GroupElement& g) const
{
    return sign_of(g) == Sign::negative ? group_.invert(g) : g;
}

} // namespace ordspace
