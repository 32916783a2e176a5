#include <gtest/gtest.h>

#include <skewgb/endo.hpp>
#include <skewgb/parse.hpp>

#include "support/invariants.hpp"

using namespace skewgb;

namespace
{

const Alphabet X{{"x"}};
const Alphabet X12{{"x1", "x2"}};

Monomial v(std::uint32_t letter, std::uint32_t place, std::uint32_t e = 1)
{
    return Monomial(Variable{letter, place}, e);
}

} // namespace

TEST(EndoTest, ShiftSquaredOnG1)
{
    const auto sigma = MonomialEndomorphism::shift();
    const Polynomial g1 = parse_polynomial("x(2)*x(0) - x(1)", Field::rationals(), X, MonomialOrder::lex());
    EXPECT_EQ(to_string(apply(sigma, 2, g1), X), "x(4)*x(2) - x(3)");
    EXPECT_EQ(apply(sigma, 0, g1), g1);
}

TEST(EndoTest, PowerSquaresVariables)
{
    const auto sigma = MonomialEndomorphism::power(2);
    EXPECT_EQ(sigma.apply(v(0, 0) * v(1, 0), 1), v(0, 0, 2) * v(1, 0, 2));
    EXPECT_EQ(sigma.apply(v(0, 3), 3), v(0, 3, 8));
    EXPECT_THROW(MonomialEndomorphism::power(1), ConfigError);
    EXPECT_THROW((void)sigma.apply(v(0, 0, 1u << 20), 20), DomainError);
}

TEST(EndoTest, DivisibilityCompatibility)
{
    EXPECT_TRUE(check_div_compatible(MonomialEndomorphism::shift()));
    EXPECT_TRUE(check_div_compatible(MonomialEndomorphism::power(3)));
    // x1 -> x1 x2, x2 -> x2 x3 share x2.
    std::map<Variable, Monomial> bad{{Variable{0, 0}, v(0, 0) * v(1, 0)}, {Variable{1, 0}, v(1, 0) * v(2, 0)}};
    EXPECT_FALSE(check_div_compatible(MonomialEndomorphism::table(bad)));
}

TEST(EndoTest, TableTailFollowsShift)
{
    // x(0) -> x(1)^2; the unlisted x(1) goes to x(2), so images stay coprime.
    const auto sigma = MonomialEndomorphism::table({{Variable{0, 0}, v(0, 1, 2)}});
    EXPECT_TRUE(sigma.div_compatible());
    EXPECT_EQ(sigma.apply(v(0, 0) * v(0, 1), 1), v(0, 1, 2) * v(0, 2));
    EXPECT_EQ(sigma.apply(v(0, 0), 2), v(0, 2, 2));
}

TEST(EndoTest, TableCollidingWithTailIsFlagged)
{
    // x(0) -> x(2) collides with the tail image of the unlisted x(1).
    EXPECT_FALSE(MonomialEndomorphism::table({{Variable{0, 0}, v(0, 2)}}).div_compatible());
    // A constant image is never coprime-injective.
    EXPECT_FALSE(MonomialEndomorphism::table({{Variable{0, 0}, Monomial{}}}).div_compatible());
}

TEST(EndoTest, OrderCompatibility)
{
    for (const auto ord : {MonomialOrder::lex(), MonomialOrder::deglex()}) {
        EXPECT_TRUE(check_order_compatible(MonomialEndomorphism::shift(), ord, 3));
        EXPECT_TRUE(check_order_compatible(MonomialEndomorphism::power(2), ord, 3));
    }
    const auto scaled = MonomialEndomorphism::table({{Variable{0, 0}, v(0, 1, 3)}});
    EXPECT_TRUE(check_order_compatible(scaled, MonomialOrder::lex(), 3));
    // x(0) < x2(0)^2 in deglex but sigma gives x(1)^3 > x2(1)^2.
    EXPECT_FALSE(check_order_compatible(scaled, MonomialOrder::deglex(), 3));
    // sigma(x2(0)) = x1(0) lies below x2(0): m <= sigma(m) fails.
    const auto down = MonomialEndomorphism::table({{Variable{1, 0}, v(0, 0)}, {Variable{0, 0}, v(0, 1)}});
    EXPECT_FALSE(check_order_compatible(down, MonomialOrder::lex(), 3));
}

TEST(EndoTest, DescribeNamesTheRule)
{
    EXPECT_EQ(MonomialEndomorphism::shift().describe(), "shift");
    EXPECT_EQ(MonomialEndomorphism::power(3).describe(), "power:3");
}

TEST(EndoTest, RandomizedInvariants)
{
    const inv::SuiteResult r = inv::endo_suite(3000, 202);
    EXPECT_TRUE(r.ok()) << r.failures << " of " << r.cases << " failed; " << r.first;
}

TEST(EndoTest, InvariantSuiteCatchesBrokenEndomorphism)
{
    // Sanity check on the oracle itself: with overlapping images
    // sigma(gcd) = gcd(sigma) must fail somewhere.
    const auto bad = MonomialEndomorphism::table({{Variable{0, 0}, v(0, 1) * v(1, 1)}, {Variable{1, 0}, v(1, 1)}});
    gen::Rng rng(3);
    const gen::Shape shape{2, 1, 3};
    bool broke = false;
    for (int k = 0; k < 2000 && !broke; ++k) {
        const Monomial a = gen::monomial(rng, shape), b = gen::monomial(rng, shape);
        broke = bad.apply(gcd(a, b), 1) != gcd(bad.apply(a, 1), bad.apply(b, 1));
    }
    EXPECT_TRUE(broke);
}
