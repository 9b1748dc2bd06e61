#include "ordspace/order_space.hpp"

#include "ordspace/error.hpp"

#include <algorithm>
#include <set>

namespace ordspace {

void check_certificate(const Certificate& c)
{
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].sign == Sign::zero)
            throw Error(ErrorCode::invalid_argument, "certificate entry " + std::to_string(k) + " has sign 0");
        for (std::size_t j = 0; j < k; ++j) {
            if (c[j].element == c[k].element)
                throw Error(ErrorCode::invalid_argument, "certificate lists an element twice");
        }
    }
}

bool agrees(const OrderOracle& oracle, const Certificate& c)
{
    return std::all_of(c.begin(), c.end(), [&](const SignedElement& e) { return oracle.sign_of(e.element) == e.sign; });
}

bool agrees(const Group& group, const OrderDescriptor& d, const Certificate& c)
{
    return agrees(OrderOracle(group, d), c);
}

Certificate isolation_certificate(const Group& group, const OrderDescriptor& d)
{
    require_valid(d);
    if (d.n != group.arity())
        throw Error(ErrorCode::arity_mismatch, "descriptor arity differs from group arity");
    if (!is_fully_mixed(d))
        throw Error(ErrorCode::not_fully_mixed, "descriptor has " + std::to_string(d.blocks.size()) + " blocks");

    const auto n = static_cast<std::size_t>(d.n);
    auto gamma_sign = [&](std::size_t bit) { return d.gamma[bit] ? Sign::positive : Sign::negative; };

    Certificate out;
    out.push_back({group.gen_zeta(1), gamma_sign(n + 1)});
    out.push_back({group.gen_lambda(Dyadic(1)), gamma_sign(n)});
    for (int i = 1; i <= d.n; ++i)
        out.push_back({group.gen_h(i, 0, Dyadic(0)), gamma_sign(static_cast<std::size_t>(i - 1))});

    const int least = d.blocks.front().front();
    const std::int64_t step = d.directions.front() ? 1 : -1;
    // |h^i_{z,0}| under d, from the sign bit of h^i_{0,0}.
    auto abs_generator = [&](int i, std::int64_t z) {
        return group.gen_h(i, z, Dyadic(0), d.gamma[static_cast<std::size_t>(i - 1)] ? Rational(1) : Rational(-1));
    };
    std::vector<GroupElement> chain{abs_generator(least, 0)};
    for (const auto& pair : d.mixing.front())
        chain.push_back(abs_generator(pair.index, pair.offset));
    chain.push_back(abs_generator(least, step));
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
        out.push_back({group.multiply(group.invert(chain[k]), chain[k + 1]), Sign::positive});

    Certificate unique;
    for (auto& e : out) {
        if (std::none_of(unique.begin(), unique.end(), [&](const SignedElement& u) { return u.element == e.element; }))
            unique.push_back(std::move(e));
    }
    return unique;
}

namespace {

std::int64_t max_abs_z(const Certificate& c)
{
    std::int64_t out = 0;
    for (const auto& e : c) {
        for (const auto& [index, coeff] : e.element.rho.terms())
            out = std::max(out, index.z < 0 ? -index.z : index.z);
    }
    return out;
}

// Merges blocks p and p+1 of d. The block holding the smaller least index
// keeps its offsets; the other block's least index is placed `magnitude` levels
// away and its pairs move with it.
OrderDescriptor merge_blocks(const OrderDescriptor& d, std::size_t p, std::int64_t magnitude)
{
    const auto& lower = d.blocks[p];
    const auto& upper = d.blocks[p + 1];
    const bool direction = d.directions[p + 1];
    const bool root_is_lower = lower.front() < upper.front();
    const std::size_t root = root_is_lower ? p : p + 1;
    const std::size_t other = root_is_lower ? p + 1 : p;
    // The other block must land above the root when it is the upper block and
    // below otherwise; which sign of shift does that depends on the direction.
    const std::int64_t shift = (root_is_lower == direction) ? -magnitude : magnitude;

    std::vector<int> merged(lower);
    merged.insert(merged.end(), upper.begin(), upper.end());
    std::sort(merged.begin(), merged.end());

    std::vector<MixPair> pairs = d.mixing[root];
    pairs.push_back({d.blocks[other].front(), shift});
    for (const auto& pair : d.mixing[other])
        pairs.push_back({pair.index, pair.offset + shift});

    OrderDescriptor out = d;
    out.blocks.erase(out.blocks.begin() + static_cast<std::ptrdiff_t>(p) + 1);
    out.blocks[p] = std::move(merged);
    out.directions.erase(out.directions.begin() + static_cast<std::ptrdiff_t>(p) + 1);
    out.directions[p] = direction;
    out.mixing.erase(out.mixing.begin() + static_cast<std::ptrdiff_t>(p) + 1);
    out.mixing[p] = std::move(pairs);
    return out;
}

} // namespace

std::vector<OrderDescriptor> limit_witness(const Group& group, const OrderDescriptor& d, const Certificate& c,
                                           std::size_t count, const WitnessOptions& options)
{
    check_certificate(c);
    OrderOracle base(group, d);
    if (d.blocks.size() < 2)
        throw Error(ErrorCode::single_block, "every H^i is already mixed; the order is isolated");
    if (!agrees(base, c))
        throw Error(ErrorCode::invalid_argument, "descriptor does not satisfy the certificate");
    if (count == 0)
        return {};

    const std::int64_t bound = max_abs_z(c) + max_abs_offset(d);
    const std::int64_t start = 2 * bound + 3;

    // Blocks with equal directions merge without disturbing c; a pair with
    // opposite directions is only tried as a fallback and filtered by agrees.
    std::vector<std::size_t> candidates;
    for (std::size_t p = 0; p + 1 < d.blocks.size(); ++p) {
        if (d.directions[p] == d.directions[p + 1])
            candidates.push_back(p);
    }
    for (std::size_t p = 0; p + 1 < d.blocks.size(); ++p) {
        if (d.directions[p] != d.directions[p + 1])
            candidates.push_back(p);
    }

    for (auto p : candidates) {
        std::vector<OrderDescriptor> out;
        for (std::int64_t t = 0; t <= options.offset_budget && out.size() < count; ++t) {
            OrderDescriptor w = merge_blocks(d, p, start + t);
            if (agrees(group, w, c))
                out.push_back(std::move(w));
        }
        if (out.size() == count)
            return out;
    }
    throw Error(ErrorCode::witness_exhausted,
                "no " + std::to_string(count) + " more-mixed orders agree with the certificate within offset budget " +
                    std::to_string(options.offset_budget));
}

bool in_Ok(const OrderDescriptor& d, int k)
{
    if (k < 1 || k > d.n)
        throw Error(ErrorCode::k_out_of_range, "k = " + std::to_string(k) + " not in 1.." + std::to_string(d.n));
    if (validate(d))
        return false;
    if (std::find(d.gamma.begin(), d.gamma.end(), false) != d.gamma.end())
        return false;
    if (std::find(d.directions.begin(), d.directions.end(), false) != d.directions.end())
        return false;
    std::vector<std::vector<int>> expected(1);
    for (int i = 1; i <= k; ++i)
        expected[0].push_back(i);
    for (int i = k + 1; i <= d.n; ++i)
        expected.push_back({i});
    if (d.blocks != expected)
        return false;
    for (std::size_t j = 0; j < d.mixing.front().size(); ++j) {
        if (d.mixing.front()[j].index != static_cast<int>(j) + 2)
            return false;
    }
    return true;
}

Partition canonical_partition(const std::vector<std::vector<int>>& blocks)
{
    Partition out = blocks;
    for (auto& b : out)
        std::sort(b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

int RankReport::shape_rank(const MixShape& s) const
{
    if (s.n != n)
        throw Error(ErrorCode::arity_mismatch, "shape arity differs from report arity");
    auto it = partition_ranks.find(canonical_partition(s.blocks));
    if (it == partition_ranks.end())
        throw Error(ErrorCode::invalid_argument, "blocks do not partition 1..n");
    return it->second;
}

RankReport cb_model(int n)
{
    if (n < 2)
        throw Error(ErrorCode::arity_out_of_range, "n must be at least 2, got " + std::to_string(n));
    std::set<Partition> remaining;
    std::uint64_t chain_shapes = 0;
    for (const auto& skeleton : enumerate_skeletons(n)) {
        remaining.insert(canonical_partition(skeleton.blocks));
        chain_shapes += std::uint64_t{1} << skeleton.blocks.size();
    }

    auto strictly_coarser_exists = [&](const Partition& fine) {
        MixShape a{n, {}, fine, {}, {}};
        return std::any_of(remaining.begin(), remaining.end(), [&](const Partition& coarse) {
            return more_mixed(a, MixShape{n, {}, coarse, {}, {}});
        });
    };

    RankReport report;
    report.n = n;
    report.shape_count = chain_shapes << (n + 2);
    int stage = 0;
    while (!remaining.empty()) {
        std::set<Partition> derived;
        for (const auto& p : remaining) {
            if (strictly_coarser_exists(p))
                derived.insert(p);
            else
                report.partition_ranks[p] = stage;
        }
        remaining = std::move(derived);
        ++stage;
    }
    report.space_rank = stage;
    return report;
}

} // namespace ordspace
