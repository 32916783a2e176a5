#include <gtest/gtest.h>

#include <skewgb/format.hpp>
#include <skewgb/letterplace.hpp>
#include <skewgb/parse.hpp>

using namespace skewgb;

namespace
{

const Alphabet XY{{"x", "y"}};
const MonomialOrder Lex = MonomialOrder::lex();

Polynomial P(std::string_view text)
{
    return parse_polynomial(text, Field::rationals(), XY, Lex);
}

template <class F>
ParseError parse_error(F &&f)
{
    try {
        f();
    } catch (const ParseError &e) {
        return e;
    }
    ADD_FAILURE() << "no ParseError";
    return ParseError("", 0, 0);
}

} // namespace

TEST(ParseTest, PolynomialGrammar)
{
    EXPECT_EQ(to_string(P("x(2)*x(0) - x(1)"), XY), "x(2)*x(0) - x(1)");
    EXPECT_EQ(P("(x(1) + y(0))^2"), P("x(1)^2 + 2*x(1)*y(0) + y(0)^2"));
    EXPECT_EQ(P("-x(0) + 1/2 - (-1/2)"), P("1 - x(0)"));
    EXPECT_EQ(P("  x( 3 )*  y(1)  "), P("y(1)*x(3)"));
    EXPECT_EQ(P("x(0)^0"), P("1"));
    EXPECT_TRUE(P("x(0) - x(0)").is_zero());
}

TEST(ParseTest, PrimeFieldCoefficients)
{
    const Polynomial f = parse_polynomial("1/2*x(0) + 7", Field::prime_field(7), XY, Lex);
    EXPECT_EQ(to_string(f, XY), "4*x(0)");
}

TEST(ParseTest, SkewGrammar)
{
    const auto sigma = MonomialEndomorphism::shift();
    const SkewElement a = parse_skew("(x(2)*x(0) - x(1))*s^2", Field::rationals(), XY, Lex, sigma);
    EXPECT_EQ(a, SkewElement(P("x(2)*x(0) - x(1)"), 2));
    EXPECT_EQ(parse_skew("s*y(0)*s", Field::rationals(), XY, Lex, sigma), SkewElement(P("y(1)"), 2));
    const auto err = parse_error([&] { parse_skew("s(1)", Field::rationals(), XY, Lex, sigma); });
    EXPECT_NE(std::string(err.what()).find("s takes no place index"), std::string::npos);
}

TEST(ParseTest, FreeGrammar)
{
    const FreePolynomial f = parse_free("y*x - x*y + 2*(x + y)^2", Field::rationals(), XY);
    EXPECT_EQ(f.degree(), 2u);
    EXPECT_EQ(to_string(f, XY), "2*y*y + x*y + 3*y*x + 2*x*x");
    EXPECT_EQ(to_string(parse_free("x^3", Field::rationals(), XY), XY), "x*x*x");
}

TEST(ParseTest, ErrorsCarryLineAndColumn)
{
    const auto e1 = parse_error([] { P("x(1) + z(0)"); });
    EXPECT_EQ(e1.line(), 1u);
    EXPECT_EQ(e1.column(), 8u);
    EXPECT_NE(std::string(e1.what()).find("unknown letter 'z'"), std::string::npos);

    const auto e2 = parse_error([] { parse_polynomial("x(1) +\n  s*x(0)", Field::rationals(), XY, Lex, SourcePos{4, 1}); });
    EXPECT_EQ(e2.line(), 5u);
    EXPECT_EQ(e2.column(), 3u);
    EXPECT_NE(std::string(e2.what()).find("s is not allowed here"), std::string::npos);
    EXPECT_EQ(std::string(e2.what()).rfind("line 5, column 3: ", 0), 0u);
}

TEST(ParseTest, MalformedInputs)
{
    EXPECT_THROW(P("x"), ParseError);
    EXPECT_THROW(P("x(1"), ParseError);
    EXPECT_THROW(P("x(1) +"), ParseError);
    EXPECT_THROW(P("x(1) x(2)"), ParseError);
    EXPECT_THROW(P("x(1)^-1"), ParseError);
    EXPECT_THROW(P("1/0"), ParseError);
    EXPECT_THROW(P("- -1"), ParseError);
    EXPECT_THROW(parse_free("x(1)", Field::rationals(), XY), ParseError);
    EXPECT_THROW(P("#"), ParseError);
}

TEST(ParseTest, PrintedOutputParsesBack)
{
    for (const char *text : {"x(2)*x(0) - x(1)", "-3/4*y(5)^3*x(1) + 2", "x(0)"}) {
        const Polynomial f = P(text);
        EXPECT_EQ(P(to_string(f, XY)), f);
    }
}
