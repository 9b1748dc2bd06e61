#include "ordspace/random.hpp"

#include <algorithm>
#include <numeric>

namespace ordspace {

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

bool Sampler::coin(double p)
{
    return std::bernoulli_distribution(p)(rng_);
}

Dyadic Sampler::unit_dyadic(unsigned bits)
{
    const std::int64_t den = std::int64_t{1} << bits;
    return Dyadic(Integer(static_cast<long>(integer(0, den - 1))), bits);
}

Dyadic Sampler::dyadic(long bound, unsigned bits)
{
    const std::int64_t den = std::int64_t{1} << bits;
    const std::int64_t span = static_cast<std::int64_t>(bound) * den - 1;
    return Dyadic(Integer(static_cast<long>(integer(-span, span))), bits);
}

Rational Sampler::rational(long bound)
{
    std::int64_t num = 0;
    while (num == 0)
        num = integer(-bound, bound);
    return Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(integer(1, bound))));
}

PElement Sampler::p_element(const Group& group, const ElementSpec& spec)
{
    PElement rho;
    const auto terms = integer(1, static_cast<std::int64_t>(spec.max_support));
    for (std::int64_t t = 0; t < terms; ++t) {
        PIndex index{static_cast<int>(integer(1, group.arity())), integer(-spec.z_bound, spec.z_bound),
                     unit_dyadic(static_cast<unsigned>(integer(0, spec.x_bits)))};
        rho.add(index, rational(spec.coeff_bound));
    }
    return rho;
}

GroupElement Sampler::element(const Group& group, const ElementSpec& spec)
{
    GroupElement g = group.from_p(p_element(group, spec));
    if (!coin(spec.p_only)) {
        g.a = dyadic(spec.a_bound, static_cast<unsigned>(integer(0, spec.a_bits)));
        g.b = integer(-spec.b_bound, spec.b_bound);
    }
    return g;
}

OrderDescriptor Sampler::descriptor(int n, std::int64_t offset_bound)
{
    // Restricted growth string gives the partition.
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    int blocks = 1;
    for (std::size_t i = 1; i < label.size(); ++i) {
        label[i] = static_cast<int>(integer(0, blocks));
        if (label[i] == blocks)
            ++blocks;
    }
    OrderDescriptor d;
    d.n = n;
    d.blocks.assign(static_cast<std::size_t>(blocks), {});
    for (int i = 1; i <= n; ++i)
        d.blocks[static_cast<std::size_t>(label[static_cast<std::size_t>(i - 1)])].push_back(i);
    std::shuffle(d.blocks.begin(), d.blocks.end(), rng_);

    for (const auto& block : d.blocks) {
        std::vector<int> chain(block.begin() + 1, block.end());
        std::shuffle(chain.begin(), chain.end(), rng_);
        std::vector<MixPair> pairs;
        for (int i : chain)
            pairs.push_back({i, integer(-offset_bound, offset_bound)});
        d.mixing.push_back(std::move(pairs));
        d.directions.push_back(coin());
    }
    for (int k = 0; k < n + 2; ++k)
        d.gamma.push_back(coin());
    return d;
}

} // namespace ordspace
