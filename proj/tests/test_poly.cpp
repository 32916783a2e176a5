#include <gtest/gtest.h>

#include <skewgb/format.hpp>
#include <skewgb/parse.hpp>
#include <skewgb/poly.hpp>

#include "support/invariants.hpp"

using namespace skewgb;

namespace
{

const Alphabet X{{"x"}};

Monomial x(std::uint32_t place, std::uint32_t e = 1)
{
    return Monomial(Variable{0, place}, e);
}

Polynomial P(const char *text, MonomialOrder ord = MonomialOrder::lex())
{
    return parse_polynomial(text, Field::rationals(), X, ord);
}

} // namespace

TEST(PolyTest, MonomialProducts)
{
    const Monomial x10{{Variable{0, 0}, 1}};
    EXPECT_EQ(x10 * x10, Monomial(Variable{0, 0}, 2));
    EXPECT_EQ(Monomial{} * x(3), x(3));
    EXPECT_EQ(x(2) * x(0) * x(1), Monomial({{Variable{0, 2}, 1}, {Variable{0, 1}, 1}, {Variable{0, 0}, 1}}));
    EXPECT_EQ(to_string(x(2) * x(0) * x(1), X), "x(2)*x(1)*x(0)");
}

TEST(PolyTest, GcdLcm)
{
    EXPECT_EQ(gcd(x(2) * x(0), x(2) * x(1)), x(2));
    EXPECT_EQ(lcm(x(2) * x(0), x(4) * x(2)), x(4) * x(2) * x(0));
    EXPECT_EQ(gcd(x(5), Monomial{}), Monomial{});
    EXPECT_TRUE((x(2) * x(0)).divides(x(4) * x(2) * x(0)));
    EXPECT_FALSE((x(2, 2)).divides(x(2) * x(1)));
    EXPECT_EQ((x(2)).quotient_of(x(2, 3) * x(0)), x(2, 2) * x(0));
    EXPECT_THROW((x(3)).quotient_of(x(2)), DomainError);
}

TEST(PolyTest, LexComparesHighestVariableFirst)
{
    const MonomialOrder lex = MonomialOrder::lex();
    EXPECT_TRUE(lex.compare(x(0), x(1)) < 0);
    EXPECT_TRUE(lex.compare(Monomial{}, x(0)) < 0);
    EXPECT_TRUE(lex.compare(x(2) * x(0), x(1)) > 0);
    EXPECT_TRUE(lex.compare(x(1), x(0, 5)) > 0);
    // Letters break ties inside a place.
    EXPECT_TRUE(lex.compare(Monomial(Variable{0, 1}), Monomial(Variable{1, 1})) < 0);
    EXPECT_TRUE(lex.compare(Monomial(Variable{1, 0}), Monomial(Variable{0, 1})) < 0);
}

TEST(PolyTest, DeglexComparesDegreeFirst)
{
    const MonomialOrder deglex = MonomialOrder::deglex();
    EXPECT_TRUE(deglex.compare(x(5), x(0, 2)) < 0);
    EXPECT_TRUE(deglex.compare(x(2) * x(0), x(1) * x(1)) > 0);
    EXPECT_TRUE(deglex.compare(Monomial{}, x(0)) < 0);
}

TEST(PolyTest, Weight)
{
    EXPECT_TRUE(Monomial{}.weight().is_minus_infinity());
    EXPECT_EQ((Monomial(Variable{0, 1}) * Monomial(Variable{1, 3})).weight(), Weight(3));
    EXPECT_EQ((x(2) * x(0)).shifted(1).weight(), Weight(3));
    EXPECT_EQ(max(Weight::minus_infinity(), Weight(4)), Weight(4));
    EXPECT_TRUE((Weight::minus_infinity() + 3).is_minus_infinity());
    EXPECT_LT(Weight::minus_infinity(), Weight(0));
    EXPECT_THROW((void)Weight::minus_infinity().value(), DomainError);
    EXPECT_EQ(P("x(2)*x(0) - x(1)").weight(), Weight(2));
    EXPECT_FALSE(P("x(2)*x(0) - x(1)").is_w_homogeneous());
    EXPECT_TRUE(P("x(2)*x(0) - x(2)").is_w_homogeneous());
}

TEST(PolyTest, Multidegree)
{
    const Monomial m = Monomial(Variable{0, 1}) * Monomial(Variable{1, 2});
    EXPECT_EQ(m.multidegree(), Multidegree::ones(2));
    EXPECT_TRUE(m.multidegree().is_ones(2));
    const Multidegree sq = Monomial(Variable{0, 1}, 2).multidegree();
    EXPECT_EQ(sq.at(1), 2u);
    EXPECT_FALSE(sq.is_ones(1));
    EXPECT_TRUE(Monomial{}.multidegree().counts().empty());
    EXPECT_TRUE(Monomial{}.multidegree().is_ones(0));
}

TEST(PolyTest, PolynomialBasics)
{
    EXPECT_EQ(P("x(1) - x(0)") + P("x(0)"), P("x(1)"));
    const Polynomial g1 = P("x(2)*x(0) - x(1)");
    EXPECT_EQ(g1.leading_monomial(), x(2) * x(0));
    EXPECT_TRUE(g1.leading_coefficient().is_one());
    EXPECT_TRUE((g1 * Field::rationals().zero()).is_zero());
    EXPECT_THROW((void)Polynomial().leading_term(), DomainError);
    EXPECT_EQ(to_string(g1, X), "x(2)*x(0) - x(1)");
    EXPECT_EQ(to_string(P("-2*x(3)^2 + 1/2"), X), "-2*x(3)^2 + 1/2");
    EXPECT_EQ(to_string(Polynomial(), X), "0");
}

TEST(PolyTest, TermsStayDescendingAndCombined)
{
    const Polynomial f = P("x(0) + x(3) + x(1)*x(0) - x(3) + 2*x(0)");
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f.terms()[0].mono, x(1) * x(0));
    EXPECT_EQ(f.terms()[1].mono, x(0));
    EXPECT_EQ(f.terms()[1].coeff, FieldElement(3));
}

TEST(PolyTest, SubMulIsOneMergePass)
{
    Polynomial f = P("x(4)*x(2)*x(0) - x(4)*x(1)");
    f.sub_mul(FieldElement(1), x(0), P("x(4)*x(2) - x(3)"));
    EXPECT_EQ(f, P("-x(4)*x(1) + x(3)*x(0)"));
}

TEST(PolyTest, MixedOrderingsThrow)
{
    EXPECT_THROW(P("x(1)") + P("x(0)", MonomialOrder::deglex()), DomainError);
}

TEST(PolyTest, RandomizedInvariants)
{
    const inv::SuiteResult r = inv::poly_suite(3000, 101);
    EXPECT_TRUE(r.ok()) << r.failures << " of " << r.cases << " failed; " << r.first;
}
