#include "oracles.hpp"

#include "ordspace/descriptor.hpp"
#include "ordspace/error.hpp"
#include "ordspace/expression.hpp"
#include "ordspace/oracle.hpp"
#include "ordspace/random.hpp"

#include <gtest/gtest.h>

using namespace ordspace;

namespace {

OrderDescriptor singletons2()
{
    return {2, bits_from_string("1111"), {{1}, {2}}, bits_from_string("11"), {{}, {}}};
}

OrderDescriptor mixed2(std::int64_t u)
{
    return {2, bits_from_string("1111"), {{1, 2}}, bits_from_string("1"), {{{2, u}}}};
}

std::string clause(const OrderDescriptor& d)
{
    auto v = validate(d);
    return v ? v->clause : "ok";
}

// Frozen counts from an independent brute-force enumerator written before the
// library (labellings x block orders x chain orders x bits x offsets).
struct Frozen {
    int n;
    std::int64_t B;
    std::uint64_t count;
};
constexpr Frozen frozen_counts[] = {
    {2, 0, 160}, {2, 1, 224}, {2, 2, 288}, {2, 4, 416},     {3, 0, 2432},
    {3, 1, 4992}, {3, 2, 8576}, {3, 3, 13184}, {3, 4, 18816}, {4, 0, 49408},
};

} // namespace

TEST(Validate, Examples)
{
    EXPECT_EQ(clause(singletons2()), "ok");
    auto bad = singletons2();
    bad.blocks = {{1}, {1, 2}};
    EXPECT_EQ(clause(bad), "blocks-partition");
    auto least = mixed2(0);
    least.mixing[0] = {{1, 0}};
    EXPECT_EQ(clause(least), "mixing-least-index");
}

TEST(Validate, EachClause)
{
    auto d = singletons2();
    d.n = 1;
    EXPECT_EQ(clause(d), "arity");
    d = singletons2();
    d.gamma.pop_back();
    EXPECT_EQ(clause(d), "gamma-length");
    d = singletons2();
    d.blocks = {{1, 2}, {}};
    EXPECT_EQ(clause(d), "blocks-nonempty");
    d = singletons2();
    d.blocks = {{1}, {3}};
    EXPECT_EQ(clause(d), "blocks-range");
    d = mixed2(0);
    d.blocks = {{2, 1}};
    EXPECT_EQ(clause(d), "blocks-sorted");
    d = singletons2();
    d.directions.pop_back();
    EXPECT_EQ(clause(d), "directions-length");
    d = singletons2();
    d.mixing.pop_back();
    EXPECT_EQ(clause(d), "mixing-length");
    d = mixed2(0);
    d.mixing[0].clear();
    EXPECT_EQ(clause(d), "mixing-coverage");
    d = singletons2();
    d.mixing[0] = {{2, 0}};
    EXPECT_NE(clause(d), "ok");
    EXPECT_THROW(require_valid(d), Error);
}

TEST(ReferenceDescriptor, Examples)
{
    const auto r2 = reference_descriptor(2);
    EXPECT_EQ(bits_to_string(r2.gamma), "1111");
    EXPECT_EQ(r2.blocks, (std::vector<std::vector<int>>{{2}, {1}}));
    EXPECT_EQ(bits_to_string(r2.directions), "00");
    const auto r3 = reference_descriptor(3);
    EXPECT_EQ(r3.blocks, (std::vector<std::vector<int>>{{3}, {2}, {1}}));
    EXPECT_EQ(bits_to_string(r3.directions), "000");
    for (int n = 2; n <= 6; ++n)
        EXPECT_FALSE(validate(reference_descriptor(n)));
    EXPECT_THROW(reference_descriptor(1), Error);
}

TEST(ReferenceDescriptor, MatchesLexicographicRecipe)
{
    // Oracle: the lexicographic order written out directly, with real
    // arithmetic for the H^i_z slice.
    for (int n : {2, 3}) {
        const Group G(n);
        const OrderOracle o(G, reference_descriptor(n));
        Sampler rng(static_cast<std::uint64_t>(40 + n));
        ElementSpec spec;
        spec.max_support = 5;
        spec.p_only = 0.7;
        int checked = 0;
        for (int k = 0; k < 500; ++k) {
            const auto g = rng.element(G, spec);
            const int expected = oracle::lexicographic_sign(G, g);
            if (expected == 2)
                continue;
            ++checked;
            ASSERT_EQ(to_int(o.sign_of(g)), expected) << format_element(g);
        }
        EXPECT_GT(checked, 490);
    }
}

TEST(Enumerate, FrozenCounts)
{
    for (const auto& f : frozen_counts)
        EXPECT_EQ(enumeration_count(f.n, f.B), f.count) << "n=" << f.n << " B=" << f.B;
    EXPECT_EQ(enumerate(2, 0).size(), 160u);
    EXPECT_EQ(enumerate(2, 1).size(), 224u);
}

TEST(Enumerate, MatchesBruteForce)
{
    for (auto [n, B] : std::vector<std::pair<int, std::int64_t>>{{2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}}) {
        const auto listed = enumerate(n, B);
        const std::set<OrderDescriptor> as_set(listed.begin(), listed.end());
        EXPECT_EQ(as_set.size(), listed.size()) << "duplicates at n=" << n;
        EXPECT_EQ(as_set, oracle::brute_force_descriptors(n, B)) << "n=" << n << " B=" << B;
        for (const auto& d : listed)
            ASSERT_FALSE(validate(d));
    }
}

TEST(Enumerate, CursorsAreIndependentAndDeterministic)
{
    DescriptorEnumerator a(2, 1);
    DescriptorEnumerator b(2, 1);
    const auto all = enumerate(2, 1);
    std::size_t k = 0;
    while (auto d = a.next()) {
        ASSERT_LT(k, all.size());
        EXPECT_EQ(*d, all[k]);
        if (k % 2 == 0) {
            auto e = b.next();
            ASSERT_TRUE(e);
            EXPECT_EQ(*e, all[k / 2]);
        }
        ++k;
    }
    EXPECT_EQ(k, all.size());
    EXPECT_FALSE(a.next());
}

TEST(Enumerate, MonotoneInBound)
{
    for (int n : {2, 3, 4})
        for (std::int64_t B = 0; B < 5; ++B)
            EXPECT_LT(enumeration_count(n, B), enumeration_count(n, B + 1));
}

TEST(MoreMixed, Examples)
{
    OrderDescriptor a = singletons2();
    OrderDescriptor b = mixed2(3);
    EXPECT_TRUE(more_mixed(a, b));
    EXPECT_FALSE(more_mixed(b, a));
    EXPECT_FALSE(more_mixed(a, a));

    OrderDescriptor c{3, bits_from_string("11111"), {{1, 2}, {3}}, bits_from_string("11"), {{{2, 0}}, {}}};
    OrderDescriptor d{3, bits_from_string("11111"), {{1}, {2, 3}}, bits_from_string("11"), {{}, {{3, 0}}}};
    EXPECT_FALSE(more_mixed(c, d));
    EXPECT_FALSE(more_mixed(d, c));
    EXPECT_THROW(more_mixed(a, c), Error);
}

TEST(MoreMixed, StrictPartialOrder)
{
    // Every third shape of G_3 keeps the cubic loop quick.
    std::vector<MixShape> all;
    const auto shapes = enumerate_shapes(3);
    for (std::size_t k = 0; k < shapes.size(); k += 3)
        all.push_back(shapes[k]);
    for (const auto& x : all) {
        EXPECT_FALSE(more_mixed(x, x));
        for (const auto& y : all) {
            if (!more_mixed(x, y))
                continue;
            EXPECT_FALSE(more_mixed(y, x));
            for (const auto& z : all) {
                if (more_mixed(y, z)) {
                    EXPECT_TRUE(more_mixed(x, z));
                }
            }
        }
    }
}

TEST(ShapeOf, Examples)
{
    const auto s = shape_of(mixed2(7));
    EXPECT_EQ(s.chains, (std::vector<std::vector<int>>{{2}}));
    EXPECT_EQ(shape_of(mixed2(7)), shape_of(mixed2(-1)));
    const auto r = shape_of(reference_descriptor(2));
    EXPECT_EQ(r.blocks, reference_descriptor(2).blocks);
    EXPECT_EQ(r.chains, (std::vector<std::vector<int>>{{}, {}}));
}

TEST(Enumerate, ShapesCoverDescriptors)
{
    const auto shapes = enumerate_shapes(3);
    std::set<MixShape> from_descriptors;
    for (const auto& d : enumerate(3, 0))
        from_descriptors.insert(shape_of(d));
    EXPECT_EQ(std::set<MixShape>(shapes.begin(), shapes.end()), from_descriptors);
    EXPECT_EQ(shapes.size(), enumeration_count(3, 0));
}

TEST(Sampler, DescriptorsAreValid)
{
    Sampler rng(77);
    for (int k = 0; k < 500; ++k) {
        const int n = static_cast<int>(rng.integer(2, 6));
        ASSERT_FALSE(validate(rng.descriptor(n, 3)));
    }
}
