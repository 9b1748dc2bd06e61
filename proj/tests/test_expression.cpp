#include "ordspace/error.hpp"
#include "ordspace/expression.hpp"
#include "ordspace/random.hpp"

#include <gtest/gtest.h>

using namespace ordspace;

namespace {

Error error_of(std::string_view text, const Group& g)
{
    try {
        parse_element(text, g);
    } catch (const Error& e) {
        return e;
    }
    ADD_FAILURE() << "parsed: " << text;
    return Error(ErrorCode::invalid_argument, "");
}

} // namespace

TEST(ParseElement, Examples)
{
    const Group G(2);
    EXPECT_EQ(parse_element("h[1,0,0]", G), G.gen_h(1, 0, Dyadic(0)));
    EXPECT_EQ(parse_element("Z^-1 * h[1,0,0] * Z", G), G.gen_h(1, 1, Dyadic(0)));
    EXPECT_EQ(error_of("h[1,0,3/2]", G).code(), ErrorCode::x_out_of_range);
    EXPECT_TRUE(parse_element("I", G).is_identity());
    EXPECT_EQ(parse_element("L^3/2^2", G), G.gen_lambda(Dyadic::parse("3/4")));
    EXPECT_EQ(parse_element("h[2,-3,1/2^1]^-5/3", G), G.gen_h(2, -3, Dyadic::parse("1/2"), Rational::parse("-5/3")));
}

TEST(ParseElement, GroupsAndPowers)
{
    const Group G(2);
    const auto g = parse_element("h[1,0,0] * L", G);
    EXPECT_EQ(parse_element("(h[1,0,0] * L)^3", G), G.power(g, 3));
    EXPECT_EQ(parse_element("(h[1,0,0]*L)^-1", G), G.invert(g));
    EXPECT_EQ(parse_element("  h [ 1 , 0 , 0 ] *L  ", G), g);
    EXPECT_EQ(parse_element("h[1,0,1/4] * h[1,0,1/4]", G), G.gen_h(1, 0, Dyadic::parse("1/4"), Rational(2)));
}

TEST(ParseElement, Errors)
{
    const Group G(2);
    auto e = error_of("h[1,0", G);
    EXPECT_EQ(e.code(), ErrorCode::syntax_error);
    EXPECT_NE(std::string(e.what()).find("position 5"), std::string::npos);
    EXPECT_EQ(error_of("h[3,0,0]", G).code(), ErrorCode::index_out_of_range);
    EXPECT_EQ(error_of("L^1/3", G).code(), ErrorCode::syntax_error);
    EXPECT_EQ(error_of("Z^1/2", G).code(), ErrorCode::syntax_error);
    EXPECT_EQ(error_of("h[1,0,0] h[1,0,0]", G).code(), ErrorCode::syntax_error);
    EXPECT_EQ(error_of("", G).code(), ErrorCode::syntax_error);
}

TEST(FormatElement, Canonical)
{
    const Group G(2);
    EXPECT_EQ(format_element(G.identity()), "I");
    GroupElement g = G.gen_h(1, 0, Dyadic::parse("1/2"), Rational::parse("-1/2"));
    g.a = Dyadic::parse("3/4");
    g.b = -2;
    EXPECT_EQ(format_element(g), "h[1,0,1/2^1]^-1/2 * L^3/2^2 * Z^-2");
    EXPECT_EQ(format_element(G.gen_h(2, 4, Dyadic(0))), "h[2,4,0]");
}

TEST(FormatElement, RoundTrip)
{
    for (int n : {2, 4}) {
        const Group G(n);
        Sampler rng(static_cast<std::uint64_t>(n));
        ElementSpec spec;
        spec.max_support = 6;
        spec.x_bits = 8;
        for (int k = 0; k < 1000; ++k) {
            const auto g = rng.element(G, spec);
            const auto text = format_element(g);
            ASSERT_EQ(parse_element(text, G), g) << text;
            ASSERT_EQ(format_element(parse_element(text, G)), text);
        }
    }
}
