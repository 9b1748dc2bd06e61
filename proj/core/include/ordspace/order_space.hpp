#pragma once

#include "ordspace/descriptor.hpp"
#include "ordspace/oracle.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace ordspace {

struct SignedElement {
    GroupElement element;
    Sign sign = Sign::positive;

    friend bool operator==(const SignedElement&, const SignedElement&) = default;
};

/// Basic open set of X(G_n): the orders giving each listed element its sign.
using Certificate = std::vector<SignedElement>;

/// Throws invalid_argument on a zero sign or a repeated element.
void check_certificate(const Certificate& c);

bool agrees(const OrderOracle& oracle, const Certificate& c);
bool agrees(const Group& group, const OrderDescriptor& d, const Certificate& c);

/// Signs of h^i_{0,0}, lambda and zeta, followed by one positive quotient per
/// link of the mixing chain |h^{i0}_{0,0}| < |h^{i1}_{u1,0}| < ... <
/// |h^{i0}_{+-1,0}|. Requires a single block.
Certificate isolation_certificate(const Group& group, const OrderDescriptor& d);

struct WitnessOptions {
    /// How many merge offsets past the first admissible one may be tried.
    std::int64_t offset_budget = 256;
};

/// `count` distinct descriptors, each strictly more mixed than d and each
/// agreeing with c. Two Archimedean-adjacent blocks (the two least with a
/// common direction, preferably) are merged; the joining offset starts past
/// 2M + 2, M = max |z| over c's supports + max |offset| of d, and moves
/// outward so that no dominant coordinate of c's elements changes.
std::vector<OrderDescriptor> limit_witness(const Group& group, const OrderDescriptor& d, const Certificate& c,
                                           std::size_t count, const WitnessOptions& options = {});

/// Membership in O_k: everything positive, blocks {1..k} < {k+1} < ... < {n}
/// with the mixed block's chain listing 2..k in order.
bool in_Ok(const OrderDescriptor& d, int k);

using Partition = std::vector<std::vector<int>>;

/// Sorted blocks, blocks ordered by least element.
Partition canonical_partition(const std::vector<std::vector<int>>& blocks);

/// Cantor-Bendixson model on mixing shapes. A shape is removed at the first
/// stage where no remaining shape is strictly more mixed. Removal depends only
/// on the partition, so ranks are stored per partition.
struct RankReport {
    int n = 2;
    std::map<Partition, int> partition_ranks;
    int space_rank = 0;
    std::uint64_t shape_count = 0;

    int shape_rank(const MixShape& s) const;
    int descriptor_rank(const OrderDescriptor& d) const { return shape_rank(shape_of(d)); }
};

RankReport cb_model(int n);

} // namespace ordspace
