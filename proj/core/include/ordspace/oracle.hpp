#pragma once

#include "ordspace/descriptor.hpp"
#include "ordspace/exact_arith.hpp"
#include "ordspace/group.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ordspace {

/// Archimedean class of an element: [1], [h^i_{z,0}], [lambda] or [zeta].
struct ArchClass {
    enum class Kind { identity, p, lambda, zeta };
    Kind kind = Kind::identity;
    int i = 0;
    std::int64_t z = 0;

    friend bool operator==(const ArchClass&, const ArchClass&) = default;
    std::string to_string() const;
};

/// Position of the index (i, z) in the linear order of n x Z that the order
/// uses to pick the dominant coordinate of a P_n element.
struct IndexKey {
    std::int64_t block_position = 0;
    std::int64_t level = 0;
    std::int64_t chain_position = 0;

    friend bool operator==(const IndexKey&, const IndexKey&) = default;
    friend auto operator<=>(const IndexKey&, const IndexKey&) = default;
};

enum class Comparison { less, equal, greater };
enum class ArchComparison { much_less, equivalent, much_greater };

std::string_view to_string(Comparison c);
std::string_view to_string(ArchComparison c);

/// Decision procedure for the order named by a descriptor.
///
/// A nonidentity rho * lambda^a * zeta^b takes the sign of zeta^b if b != 0,
/// else of lambda^a if a != 0, else of the slice of rho at the support index
/// with the largest IndexKey. That slice lives in the Archimedean group H^i_z
/// and is signed by linear_comb_sign, flipped when gamma marks h^i_{0,0}
/// negative.
///
/// The constructor validates the descriptor once; afterwards every query is a
/// pure function of its arguments.
class OrderOracle {
public:
    OrderOracle(Group group, OrderDescriptor descriptor, SignOptions options = {});

    const Group& group() const { return group_; }
    const OrderDescriptor& descriptor() const { return descriptor_; }

    /// For i with chain position j in its block (offset u_0 = 0 for the least
    /// index): level = z - u_j for a positive block, u_j - z for a negative one.
    IndexKey index_key(int i, std::int64_t z) const;

    Sign sign_of(const GroupElement& g) const;
    /// Sign of g^{-1} h.
    Comparison compare(const GroupElement& g, const GroupElement& h) const;
    ArchClass arch_class(const GroupElement& g) const;
    /// Identity < every P(i,z) (ordered by index_key) < Lambda < Zeta.
    ArchComparison arch_compare(const GroupElement& g, const GroupElement& h) const;

    /// max(g, g^{-1})
    GroupElement abs(const GroupElement& g) const;

private:
    struct IndexInfo {
        std::int64_t block_position;
        std::int64_t chain_position;
        std::int64_t offset;
        bool positive;
    };

    int compare_classes(const ArchClass& a, const ArchClass& b) const;

    Group group_;
    OrderDescriptor descriptor_;
    SignOptions options_;
    std::vector<IndexInfo> info_; // indexed by i - 1
};

} // namespace ordspace
