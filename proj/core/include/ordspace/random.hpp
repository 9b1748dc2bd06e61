#pragma once

#include "ordspace/descriptor.hpp"
#include "ordspace/group.hpp"

#include <cstdint>
#include <random>

namespace ordspace {

/// Bounds for random group elements.
struct ElementSpec {
    std::size_t max_support = 4;  // generator terms in the P-part
    std::int64_t z_bound = 3;     // |z| <= z_bound
    unsigned x_bits = 3;          // x has denominator dividing 2^x_bits
    long coeff_bound = 5;         // numerators and denominators of coefficients
    long a_bound = 2;             // |a| < a_bound
    unsigned a_bits = 2;
    std::int64_t b_bound = 2;     // |b| <= b_bound
    double p_only = 0.5;          // probability that a = b = 0
};

/// Seeded source of random test data. Same seed, same stream.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& engine() { return rng_; }

    std::int64_t integer(std::int64_t lo, std::int64_t hi);
    std::size_t index(std::size_t size) { return static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(size) - 1)); }
    bool coin(double p = 0.5);

    /// 0 <= x < 1 with denominator dividing 2^bits.
    Dyadic unit_dyadic(unsigned bits);
    /// |value| < bound with denominator dividing 2^bits.
    Dyadic dyadic(long bound, unsigned bits);
    /// Nonzero, numerator and denominator bounded by `bound`.
    Rational rational(long bound);

    PElement p_element(const Group& group, const ElementSpec& spec);
    GroupElement element(const Group& group, const ElementSpec& spec);
    /// Valid descriptor with offsets in [-B, B]; not uniform over enumerate().
    OrderDescriptor descriptor(int n, std::int64_t offset_bound);

private:
    std::mt19937_64 rng_;
};

} // namespace ordspace
