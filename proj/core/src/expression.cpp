#include "ordspace/expression.hpp"

#include "ordspace/error.hpp"

#include <cctype>

namespace ordspace {

namespace {

class Parser {
public:
    Parser(std::string_view text, const Group& group) : text_(text), group_(group) {}

    GroupElement parse()
    {
        GroupElement g = element();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return g;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorCode::syntax_error, "at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    // Longest run of characters that can make up a number literal, including
    // the `/2^k` dyadic suffix. Interior whitespace is dropped.
    std::string number_text(bool allow_fraction)
    {
        skip_ws();
        std::string out;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
            out += text_[pos_++];
        auto digits = [&] {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                out += text_[pos_++];
            if (pos_ == start)
                fail("expected digits");
        };
        digits();
        if (allow_fraction && accept('/')) {
            out += '/';
            digits();
            if (accept('^')) {
                out += '^';
                digits();
            }
        }
        return out;
    }

    std::int64_t integer_literal()
    {
        std::size_t start = pos_;
        Integer v = parse_integer(number_text(false));
        if (!v.fits_slong_p()) {
            pos_ = start;
            fail("integer out of range");
        }
        return v.get_si();
    }

    GroupElement element()
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == 'I') {
            ++pos_;
            return group_.identity();
        }
        GroupElement g = term();
        while (accept('*'))
            g = group_.multiply(g, term());
        return g;
    }

    GroupElement term()
    {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        char c = text_[pos_];
        if (c == 'h') {
            ++pos_;
            expect('[');
            std::size_t at = pos_;
            std::int64_t i = integer_literal();
            expect(',');
            std::int64_t z = integer_literal();
            expect(',');
            Dyadic x = dyadic_literal();
            expect(']');
            if (i < 1 || i > group_.arity())
                throw Error(ErrorCode::index_out_of_range,
                            "at position " + std::to_string(at) + ": h index " + std::to_string(i) + " not in 1.." +
                                std::to_string(group_.arity()));
            if (x.sign() < 0 || x >= Dyadic(1))
                throw Error(ErrorCode::x_out_of_range,
                            "at position " + std::to_string(at) + ": x = " + x.to_string() + " not in [0,1)");
            Rational r(1);
            if (accept('^'))
                r = rational_literal();
            return group_.gen_h(static_cast<int>(i), z, x, r);
        }
        if (c == 'L') {
            ++pos_;
            return group_.gen_lambda(accept('^') ? dyadic_literal() : Dyadic(1));
        }
        if (c == 'Z') {
            ++pos_;
            return group_.gen_zeta(accept('^') ? integer_literal() : 1);
        }
        if (c == '(') {
            ++pos_;
            GroupElement g = element();
            expect(')');
            if (accept('^'))
                g = group_.power(g, integer_literal());
            return g;
        }
        fail("expected h[...], L, Z, I or '('");
    }

    Rational rational_literal()
    {
        std::size_t start = pos_;
        try {
            return Rational::parse(number_text(true));
        } catch (const Error& e) {
            pos_ = start;
            fail("expected rational");
        }
    }

    Dyadic dyadic_literal()
    {
        std::size_t start = pos_;
        try {
            return Dyadic::parse(number_text(true));
        } catch (const Error& e) {
            pos_ = start;
            fail("expected dyadic rational");
        }
    }

    std::string_view text_;
    const Group& group_;
    std::size_t pos_ = 0;
};

} // namespace

GroupElement parse_element(std::string_view text, const Group& group)
{
    return Parser(text, group).parse();
}

std::string format_element(const GroupElement& g)
{
    if (g.is_identity())
        return "I";
    std::string out;
    auto sep = [&] {
        if (!out.empty())
            out += " * ";
    };
    for (const auto& [index, coeff] : g.rho.terms()) {
        sep();
        out += "h[" + std::to_string(index.i) + "," + std::to_string(index.z) + "," + index.x.to_string() + "]";
        if (coeff != Rational(1))
            out += "^" + coeff.to_string();
    }
    if (!g.a.is_zero()) {
        sep();
        out += "L";
        if (g.a != Dyadic(1))
            out += "^" + g.a.to_string();
    }
    if (g.b != 0) {
        sep();
        out += "Z";
        if (g.b != 1)
            out += "^" + std::to_string(g.b);
    }
    return out;
}

} // namespace ordspace
