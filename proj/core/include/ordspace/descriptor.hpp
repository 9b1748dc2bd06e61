#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ordspace {

using BitString = std::vector<bool>;

struct MixPair {
    int index = 0;
    std::int64_t offset = 0;

    friend bool operator==(const MixPair&, const MixPair&) = default;
    friend auto operator<=>(const MixPair&, const MixPair&) = default;
};

/// The invariants naming one order of G_n.
///
/// - gamma: n+2 bits, signs of h^1_{0,0}..h^n_{0,0}, lambda, zeta (1 = positive).
/// - blocks: the mixing classes of {1..n}, listed from the Archimedean-least
///   class upward. Each block is kept sorted.
/// - directions: one bit per block (1 = classes of h^i_{z,0} increase with z).
/// - mixing: parallel to blocks. For a block of size k >= 2 it lists the k-1
///   non-least indices with their offsets, in the order in which their classes
///   sit between those of h^{i0}_{0,0} and h^{i0}_{+-1,0} (i0 = least index).
///   Empty for singleton blocks.
struct OrderDescriptor {
    int n = 2;
    BitString gamma;
    std::vector<std::vector<int>> blocks;
    BitString directions;
    std::vector<std::vector<MixPair>> mixing;

    friend bool operator==(const OrderDescriptor&, const OrderDescriptor&) = default;
    friend auto operator<=>(const OrderDescriptor&, const OrderDescriptor&) = default;
};

/// OrderDescriptor with the offsets erased.
struct MixShape {
    int n = 2;
    BitString gamma;
    std::vector<std::vector<int>> blocks;
    BitString directions;
    std::vector<std::vector<int>> chains;

    friend bool operator==(const MixShape&, const MixShape&) = default;
    friend auto operator<=>(const MixShape&, const MixShape&) = default;
};

struct Violation {
    std::string clause;
    std::string detail;
};

/// std::nullopt when every invariant holds; otherwise the first violated clause.
std::optional<Violation> validate(const OrderDescriptor& d);

/// Throws invalid_descriptor carrying the violation.
void require_valid(const OrderDescriptor& d);

/// The lexicographic order used to show G_n orderable: every generator
/// positive, H^1 Archimedean-largest, lower z dominating inside each H^i.
OrderDescriptor reference_descriptor(int n);

/// true iff d1's partition is a proper refinement of d2's.
bool more_mixed(const OrderDescriptor& d1, const OrderDescriptor& d2);
bool more_mixed(const MixShape& s1, const MixShape& s2);

MixShape shape_of(const OrderDescriptor& d);

/// Number of descriptors with arity n and all offsets in [-B, B].
std::uint64_t enumeration_count(int n, std::int64_t offset_bound);

/// Cursor over every valid descriptor with offsets in [-B, B], each exactly
/// once. Order: set partition (restricted growth strings, lexicographic), block
/// order, chain order inside each block, gamma, directions, offsets ascending.
/// Independent cursors share nothing.
class DescriptorEnumerator {
public:
    DescriptorEnumerator(int n, std::int64_t offset_bound);

    std::optional<OrderDescriptor> next();

private:
    bool advance_offsets();
    void load_skeleton();

    int n_;
    std::int64_t bound_;
    std::vector<MixShape> skeletons_; // gamma/directions unset
    std::size_t skeleton_ = 0;
    OrderDescriptor current_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<OrderDescriptor> enumerate(int n, std::int64_t offset_bound);

/// Every MixShape of arity n, in the same order as the descriptors.
std::vector<MixShape> enumerate_shapes(int n);

/// Ordered partitions with chain orders (no gamma, directions or offsets).
std::vector<MixShape> enumerate_skeletons(int n);

std::size_t block_count_with_size_at_least(const OrderDescriptor& d, std::size_t size);
bool is_fully_mixed(const OrderDescriptor& d);
std::int64_t max_abs_offset(const OrderDescriptor& d);

std::string bits_to_string(const BitString& bits);
BitString bits_from_string(const std::string& text);

} // namespace ordspace
