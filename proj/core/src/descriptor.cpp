#include "ordspace/descriptor.hpp"

#include "ordspace/error.hpp"

#include <algorithm>
#include <numeric>

namespace ordspace {

std::string bits_to_string(const BitString& bits)
{
    std::string out;
    out.reserve(bits.size());
    for (bool b : bits)
        out += b ? '1' : '0';
    return out;
}

BitString bits_from_string(const std::string& text)
{
    BitString out;
    out.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw Error(ErrorCode::format_error, "bit string may only contain 0 and 1: '" + text + "'");
        out.push_back(c == '1');
    }
    return out;
}

std::optional<Violation> validate(const OrderDescriptor& d)
{
    auto fail = [](std::string clause, std::string detail) { return Violation{std::move(clause), std::move(detail)}; };
    if (d.n < 2)
        return fail("arity", "n = " + std::to_string(d.n) + " < 2");
    if (d.gamma.size() != static_cast<std::size_t>(d.n) + 2)
        return fail("gamma-length", "gamma has " + std::to_string(d.gamma.size()) + " bits, expected " + std::to_string(d.n + 2));
    if (d.blocks.empty())
        return fail("blocks-nonempty", "no blocks");
    std::vector<int> seen(static_cast<std::size_t>(d.n) + 1, 0);
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
        const auto& block = d.blocks[b];
        if (block.empty())
            return fail("blocks-nonempty", "block " + std::to_string(b) + " is empty");
        for (int i : block) {
            if (i < 1 || i > d.n)
                return fail("blocks-range", "index " + std::to_string(i) + " not in 1.." + std::to_string(d.n));
            if (seen[static_cast<std::size_t>(i)]++)
                return fail("blocks-partition", "index " + std::to_string(i) + " appears more than once");
        }
        if (!std::is_sorted(block.begin(), block.end()))
            return fail("blocks-sorted", "block " + std::to_string(b) + " is not listed in increasing order");
    }
    for (int i = 1; i <= d.n; ++i) {
        if (!seen[static_cast<std::size_t>(i)])
            return fail("blocks-partition", "index " + std::to_string(i) + " is in no block");
    }
    if (d.directions.size() != d.blocks.size())
        return fail("directions-length",
                    "directions has " + std::to_string(d.directions.size()) + " bits for " + std::to_string(d.blocks.size()) + " blocks");
    if (d.mixing.size() != d.blocks.size())
        return fail("mixing-length", "mixing has " + std::to_string(d.mixing.size()) + " entries for " +
                                         std::to_string(d.blocks.size()) + " blocks");
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
        const auto& block = d.blocks[b];
        const auto& pairs = d.mixing[b];
        int least = block.front();
        for (const auto& pair : pairs) {
            if (pair.index == least)
                return fail("mixing-least-index", "block " + std::to_string(b) + " lists its least index " + std::to_string(least));
        }
        std::vector<int> listed;
        for (const auto& pair : pairs)
            listed.push_back(pair.index);
        std::sort(listed.begin(), listed.end());
        std::vector<int> expected(block.begin() + 1, block.end());
        if (listed != expected)
            return fail("mixing-coverage", "block " + std::to_string(b) + " pairs must cover its non-least indices exactly once");
    }
    return std::nullopt;
}

void require_valid(const OrderDescriptor& d)
{
    if (auto v = validate(d))
        throw Error(ErrorCode::invalid_descriptor, v->clause + ": " + v->detail);
}

OrderDescriptor reference_descriptor(int n)
{
    if (n < 2)
        throw Error(ErrorCode::arity_out_of_range, "n must be at least 2, got " + std::to_string(n));
    OrderDescriptor d;
    d.n = n;
    d.gamma.assign(static_cast<std::size_t>(n) + 2, true);
    for (int i = n; i >= 1; --i)
        d.blocks.push_back({i});
    d.directions.assign(static_cast<std::size_t>(n), false);
    d.mixing.assign(static_cast<std::size_t>(n), {});
    return d;
}

namespace {

// Lexicographic increment with position 0 most significant.
bool increment_bits(BitString& bits)
{
    for (std::size_t k = bits.size(); k > 0; --k) {
        if (!bits[k - 1]) {
            bits[k - 1] = true;
            std::fill(bits.begin() + static_cast<std::ptrdiff_t>(k), bits.end(), false);
            return true;
        }
    }
    return false;
}

bool refines_properly(int n1, const std::vector<std::vector<int>>& fine, int n2, const std::vector<std::vector<int>>& coarse)
{
    if (n1 != n2)
        throw Error(ErrorCode::arity_mismatch, "more_mixed: arities " + std::to_string(n1) + " and " + std::to_string(n2));
    std::vector<std::size_t> owner(static_cast<std::size_t>(n2) + 1, 0);
    for (std::size_t b = 0; b < coarse.size(); ++b) {
        for (int i : coarse[b])
            owner[static_cast<std::size_t>(i)] = b;
    }
    for (const auto& block : fine) {
        for (int i : block) {
            if (owner[static_cast<std::size_t>(i)] != owner[static_cast<std::size_t>(block.front())])
                return false;
        }
    }
    return fine.size() > coarse.size();
}

} // namespace

bool more_mixed(const OrderDescriptor& d1, const OrderDescriptor& d2)
{
    return refines_properly(d1.n, d1.blocks, d2.n, d2.blocks);
}

bool more_mixed(const MixShape& s1, const MixShape& s2)
{
    return refines_properly(s1.n, s1.blocks, s2.n, s2.blocks);
}

MixShape shape_of(const OrderDescriptor& d)
{
    MixShape s{d.n, d.gamma, d.blocks, d.directions, {}};
    for (const auto& pairs : d.mixing) {
        std::vector<int> chain;
        for (const auto& pair : pairs)
            chain.push_back(pair.index);
        s.chains.push_back(std::move(chain));
    }
    return s;
}

std::uint64_t enumeration_count(int n, std::int64_t offset_bound)
{
    if (n < 2)
        throw Error(ErrorCode::arity_out_of_range, "n must be at least 2");
    if (offset_bound < 0)
        throw Error(ErrorCode::invalid_argument, "offset bound must be nonnegative");
    // Unsigned Stirling numbers of the first kind count set partitions into m
    // blocks weighted by the (|block| - 1)! chain orders of each block.
    std::vector<std::vector<std::uint64_t>> c(static_cast<std::size_t>(n) + 1,
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
    c[0][0] = 1;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(n); ++k) {
        for (std::size_t m = 1; m <= k; ++m)
            c[k][m] = c[k - 1][m - 1] + (k - 1) * c[k - 1][m];
    }
    const auto width = static_cast<std::uint64_t>(2 * offset_bound + 1);
    std::uint64_t total = 0;
    std::uint64_t factorial = 1;
    for (int m = 1; m <= n; ++m) {
        factorial *= static_cast<std::uint64_t>(m);
        std::uint64_t offsets = 1;
        for (int j = 0; j < n - m; ++j)
            offsets *= width;
        total += c[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] * factorial * (std::uint64_t{1} << m) * offsets;
    }
    return total << (n + 2);
}

std::vector<MixShape> enumerate_skeletons(int n)
{
    if (n < 2)
        throw Error(ErrorCode::arity_out_of_range, "n must be at least 2");
    std::vector<MixShape> out;
    // Restricted growth strings: label[0] = 0, label[j] <= 1 + max(label[0..j-1]).
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    while (true) {
        int blocks_count = *std::max_element(label.begin(), label.end()) + 1;
        std::vector<std::vector<int>> partition(static_cast<std::size_t>(blocks_count));
        for (int i = 0; i < n; ++i)
            partition[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])].push_back(i + 1);

        std::vector<std::size_t> order(partition.size());
        std::iota(order.begin(), order.end(), 0);
        do {
            std::vector<std::vector<int>> blocks;
            for (auto b : order)
                blocks.push_back(partition[b]);
            std::vector<std::vector<int>> chains;
            for (const auto& block : blocks)
                chains.emplace_back(block.begin() + 1, block.end());
            while (true) {
                out.push_back(MixShape{n, {}, blocks, {}, chains});
                // Odometer over the chain permutations, last block fastest.
                std::size_t b = chains.size();
                while (b > 0 && !std::next_permutation(chains[b - 1].begin(), chains[b - 1].end()))
                    --b;
                if (b == 0)
                    break;
            }
        } while (std::next_permutation(order.begin(), order.end()));

        int j = n - 1;
        for (; j > 0; --j) {
            int prefix_max = *std::max_element(label.begin(), label.begin() + j);
            if (label[static_cast<std::size_t>(j)] <= prefix_max) {
                ++label[static_cast<std::size_t>(j)];
                std::fill(label.begin() + j + 1, label.end(), 0);
                break;
            }
        }
        if (j == 0)
            break;
    }
    return out;
}

DescriptorEnumerator::DescriptorEnumerator(int n, std::int64_t offset_bound)
    : n_(n), bound_(offset_bound), skeletons_(enumerate_skeletons(n))
{
    if (offset_bound < 0)
        throw Error(ErrorCode::invalid_argument, "offset bound must be nonnegative");
}

void DescriptorEnumerator::load_skeleton()
{
    const MixShape& s = skeletons_[skeleton_];
    current_.n = n_;
    current_.gamma.assign(static_cast<std::size_t>(n_) + 2, false);
    current_.blocks = s.blocks;
    current_.directions.assign(s.blocks.size(), false);
    current_.mixing.clear();
    for (const auto& chain : s.chains) {
        std::vector<MixPair> pairs;
        for (int i : chain)
            pairs.push_back({i, -bound_});
        current_.mixing.push_back(std::move(pairs));
    }
}

bool DescriptorEnumerator::advance_offsets()
{
    for (std::size_t b = current_.mixing.size(); b > 0; --b) {
        auto& pairs = current_.mixing[b - 1];
        for (std::size_t k = pairs.size(); k > 0; --k) {
            if (pairs[k - 1].offset < bound_) {
                ++pairs[k - 1].offset;
                for (std::size_t kk = k; kk < pairs.size(); ++kk)
                    pairs[kk].offset = -bound_;
                for (std::size_t bb = b; bb < current_.mixing.size(); ++bb) {
                    for (auto& p : current_.mixing[bb])
                        p.offset = -bound_;
                }
                return true;
            }
        }
    }
    return false;
}

std::optional<OrderDescriptor> DescriptorEnumerator::next()
{
    if (done_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        load_skeleton();
        return current_;
    }
    if (advance_offsets())
        return current_;
    for (auto& bucket : current_.mixing) {
        for (auto& p : bucket)
            p.offset = -bound_;
    }
    if (increment_bits(current_.directions))
        return current_;
    current_.directions.assign(current_.directions.size(), false);
    if (increment_bits(current_.gamma))
        return current_;
    if (++skeleton_ == skeletons_.size()) {
        done_ = true;
        return std::nullopt;
    }
    load_skeleton();
    return current_;
}

std::vector<OrderDescriptor> enumerate(int n, std::int64_t offset_bound)
{
    std::vector<OrderDescriptor> out;
    DescriptorEnumerator cursor(n, offset_bound);
    while (auto d = cursor.next())
        out.push_back(std::move(*d));
    return out;
}

std::vector<MixShape> enumerate_shapes(int n)
{
    std::vector<MixShape> out;
    for (const auto& skeleton : enumerate_skeletons(n)) {
        MixShape s = skeleton;
        s.gamma.assign(static_cast<std::size_t>(n) + 2, false);
        do {
            s.directions.assign(s.blocks.size(), false);
            do {
                out.push_back(s);
            } while (increment_bits(s.directions));
        } while (increment_bits(s.gamma));
    }
    return out;
}

std::size_t block_count_with_size_at_least(const OrderDescriptor& d, std::size_t size)
{
    return static_cast<std::size_t>(
        std::count_if(d.blocks.begin(), d.blocks.end(), [&](const auto& b) { return b.size() >= size; }));
}

bool is_fully_mixed(const OrderDescriptor& d)
{
    return d.blocks.size() == 1;
}

std::int64_t max_abs_offset(const OrderDescriptor& d)
{
    std::int64_t out = 0;
    for (const auto& pairs : d.mixing) {
        for (const auto& p : pairs)
            out = std::max(out, p.offset < 0 ? -p.offset : p.offset);
    }
    return out;
}

} // namespace ordspace
