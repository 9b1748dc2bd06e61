#pragma once

#include "ordspace/order_space.hpp"
#include "ordspace/random.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ordspace {

struct CheckResult {
    std::string name;
    std::string subject; // the statement being exercised
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;
    double seconds = 0;
    bool skipped = false; // nothing was run at this scale

    bool passed() const { return failures == 0; }
};

struct VerifyConfig {
    int n = 2;
    std::int64_t offset_bound = 2;
    std::size_t samples = 500;
    std::uint64_t seed = 1;
    std::vector<std::uint64_t> primes; // empty: first n primes
    SignOptions sign;
};

// Definitional Archimedean tests under the order of `oracle`.

/// |g|^N < |h| for N = 1..cap.
bool much_less_by_definition(const OrderOracle& oracle, const GroupElement& g, const GroupElement& h, int cap = 8);
/// |g| < |h|^m and |h| < |g|^k for some m, k <= cap.
bool equivalent_by_search(const OrderOracle& oracle, const GroupElement& g, const GroupElement& h, int cap = 64);

// Individual checks. Each catches library errors and records them as failures.

/// lambda^{-alpha} h^{i,r}_{z,x} lambda^alpha against floor arithmetic done in Q,
/// plus composition and additivity of the action.
CheckResult check_lambda_action(const Group& group, Sampler& rng, std::size_t samples);
/// zeta shifts z; zeta^{-beta} lambda^alpha zeta^beta = lambda^{alpha/2^beta}.
CheckResult check_zeta_action(const Group& group, Sampler& rng, std::size_t samples);
/// Associativity, identity, inverses, conjugate = k^{-1} g k.
CheckResult check_group_axioms(const Group& group, Sampler& rng, std::size_t samples, std::size_t max_support = 6);
/// Trichotomy, antisymmetry, cone closure and conjugation invariance, with
/// `pairs` random element pairs per descriptor.
CheckResult check_order_axioms(const Group& group, const std::vector<OrderDescriptor>& ds, Sampler& rng,
                               std::size_t pairs, const SignOptions& sign = {});
/// Inside one H^i_z the oracle's sign is the sign of sum r_j p_i^{x_j} (or its
/// negative when gamma marks h^i_{0,0} negative); flipping that bit negates it.
CheckResult check_slice_order(const Group& group, const std::vector<OrderDescriptor>& ds, Sampler& rng,
                              std::size_t samples, const SignOptions& sign = {});
/// h^i_{z,0} << h^i_{z+1,0} << lambda << zeta for z in [-z_bound, z_bound]
/// (reversed along z for a negative block).
CheckResult check_class_ladder(const Group& group, const std::vector<OrderDescriptor>& ds, std::int64_t z_bound = 5);
/// h^i_{u,0} and h^j_{v,0} (i != j) are never equivalent, |u|, |v| <= bound.
CheckResult check_factor_classes_distinct(const Group& group, const std::vector<OrderDescriptor>& ds,
                                          std::int64_t bound = 3);
/// For every mixed block, the chain h^{i0}_{0,0} << h^{i1}_{u1,0} << ... <<
/// h^{i0}_{+-1,0} holds definitionally, and u_j is the only level of i_j in
/// [u_j - window, u_j + window] that fits between the two ends.
CheckResult check_mixed_interleaving(const Group& group, const std::vector<OrderDescriptor>& ds,
                                     std::int64_t window = 4);
/// All indices of one block move in the block's direction.
CheckResult check_same_direction(const Group& group, const std::vector<OrderDescriptor>& ds, std::int64_t z_bound = 3);
/// Reflexivity, symmetry under inversion, closure of << under products,
/// absorption, transitivity, and classes of products over distinct factors.
/// Equivalences and << verdicts are confirmed by the definitional tests.
CheckResult check_archimedean_facts(const Group& group, const std::vector<OrderDescriptor>& ds, Sampler& rng,
                                    std::size_t samples);
/// Flipping every gamma bit negates sign_of and fixes arch_class.
CheckResult check_duality(const Group& group, const std::vector<OrderDescriptor>& ds, Sampler& rng,
                          std::size_t samples);
/// enumerate(n, B) has enumeration_count(n, B) distinct valid members.
CheckResult check_enumeration(int n, std::int64_t offset_bound);
/// Distinct descriptors differ in sign on some generator h^i_{z,0} (|z| <=
/// z_bound), lambda, zeta, quotient (h^i_{z,0})^{-1} h^j_{z',0} or product
/// h^i_{z,0} h^j_{z',0}.
CheckResult check_injectivity(const Group& group, const std::vector<OrderDescriptor>& ds, std::int64_t z_bound);
/// Each fully mixed d agrees with its isolation certificate, and no other
/// member of `universe` does.
CheckResult check_isolation(const Group& group, const std::vector<OrderDescriptor>& fully_mixed,
                            const std::vector<OrderDescriptor>& universe);
/// For each d, `certificates` random certificates read off d's signs on
/// elements with |z| <= z_bound; limit_witness must return `count` distinct,
/// valid, more mixed descriptors agreeing with each.
CheckResult check_limit_points(const Group& group, const std::vector<OrderDescriptor>& ds, Sampler& rng,
                               std::size_t certificates, std::size_t count = 5, std::int64_t z_bound = 4);
/// cb_model(n): rank n, O_k partitions at n - k, strictly monotone in mixing.
CheckResult check_cb_rank(int n);

/// Every O_k member (k < n) with offsets in [-B, B].
std::vector<OrderDescriptor> ok_descriptors(int n, std::int64_t offset_bound);

/// Names of the groups run by run_verify, in output order.
std::vector<std::string> verify_check_names();

/// Runs every check at desk scale. Descriptor pools are the full enumeration
/// when it is small and seeded samples otherwise.
std::vector<CheckResult> run_verify(const VerifyConfig& config);

} // namespace ordspace
