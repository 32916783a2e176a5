#include <gtest/gtest.h>

#include <skewgb/engine.hpp>
#include <skewgb/format.hpp>
#include <skewgb/oracle.hpp>
#include <skewgb/parse.hpp>

#include "support/gen.hpp"

using namespace skewgb;

namespace
{

const Alphabet X{{"x"}};
const MonomialEndomorphism Sigma = MonomialEndomorphism::shift();

Polynomial P(const char *text, MonomialOrder ord = MonomialOrder::lex())
{
    return parse_polynomial(text, Field::rationals(), X, ord);
}

SkewElement S(const char *text)
{
    return parse_skew(text, Field::rationals(), X, MonomialOrder::lex(), Sigma);
}

std::vector<std::string> render(const std::vector<SkewElement> &G)
{
    std::vector<std::string> out;
    for (const auto &g : G) {
        out.push_back(to_string(g, X));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> render(const std::vector<Polynomial> &G)
{
    std::vector<SkewElement> S;
    for (const auto &g : G) {
        S.emplace_back(g, 0);
    }
    return render(S);
}

// The worked difference example: the basis listed with the computation.
std::vector<std::string> difference_basis()
{
    return render(std::vector<Polynomial>{P("x(2)*x(0) - x(1)"), P("x(4)*x(1) - x(3)*x(0)"), P("x(3)^2*x(0) - x(3)"),
                                          P("x(4)*x(3)*x(0) - x(4)"), P("x(5) - x(4)*x(0)")});
}

GBConfig sigma6()
{
    return GBConfig::make(Mode::sigma_ideal, 6);
}

} // namespace

TEST(EngineTest, SPolynomialOfG1WithItsSecondShift)
{
    const Polynomial g1 = P("x(2)*x(0) - x(1)");
    const Polynomial sp = spoly(g1, apply(Sigma, 2, g1));
    EXPECT_EQ(sp, P("-x(4)*x(1) + x(3)*x(0)"));
    const Polynomial r = reduce(sp, {g1}, sigma6());
    EXPECT_EQ(r, P("-x(4)*x(1) + x(3)*x(0)"));
    EXPECT_EQ(r.monic(), P("x(4)*x(1) - x(3)*x(0)"));
}

TEST(EngineTest, SPolynomialNeedsEqualSDegrees)
{
    EXPECT_THROW(spoly(S("x(0)*s"), S("x(0)*s^2")), DomainError);
    EXPECT_TRUE(spoly(S("x(1)*s - x(0)*s"), S("x(1)*s - x(0)*s")).is_zero());
}

TEST(EngineTest, DifferenceIdealBasis)
{
    const GBResult r = sigma_gbasis({P("x(2)*x(0) - x(1)")}, sigma6());
    EXPECT_EQ(render(r.polynomials()), difference_basis());
    EXPECT_TRUE(certify(r.basis, sigma6()).ok);
    EXPECT_FALSE(r.unit_ideal);
    EXPECT_EQ(r.degree_bound, 6u);
}

TEST(EngineTest, MonomialAndEmptyInputs)
{
    const GBResult mono = sigma_gbasis({P("x(0)")}, sigma6());
    EXPECT_EQ(render(mono.polynomials()), std::vector<std::string>{"x(0)"});
    EXPECT_TRUE(sigma_gbasis({}, sigma6()).basis.empty());
    const auto skew = GBConfig::make(Mode::two_sided_skew, 4);
    EXPECT_TRUE(skew_gbasis({}, skew).basis.empty());
    EXPECT_EQ(render(skew_gbasis({S("x(1)*x(0)*s^2")}, skew).basis), std::vector<std::string>{"x(1)*x(0)*s^2"});
}

TEST(EngineTest, SkewRouteProjectsOntoTheDifferenceBasis)
{
    const GBResult r = skew_gbasis({S("(x(2)*x(0) - x(1))*s^2")}, GBConfig::make(Mode::two_sided_skew, 6));
    EXPECT_TRUE(certify(r.basis, GBConfig::make(Mode::two_sided_skew, 6)).ok);
    std::vector<SkewElement> projected;
    for (const auto &p : r.polynomials()) {
        projected.emplace_back(p, 0);
    }
    EXPECT_EQ(render(interreduce(projected, sigma6())), difference_basis());
}

TEST(EngineTest, LeftModeExamples)
{
    const auto cfg = GBConfig::make(Mode::left_skew, 3);
    EXPECT_EQ(render(left_gbasis({S("x(0)*s"), S("x(0)*s")}, cfg).basis), std::vector<std::string>{"x(0)*s"});
    EXPECT_TRUE(left_gbasis({}, cfg).basis.empty());
    // Left mode accepts inputs that are not s-homogeneous.
    const GBResult r = left_gbasis({S("x(1)*s + x(0)")}, cfg);
    EXPECT_TRUE(certify(r.basis, cfg).ok);
}

TEST(EngineTest, LeftModeSingleMonomialNeedsNothingNew)
{
    // Hand check: spoly(x(0)s, s^i x(0)s) for i = 1, 2 is the difference of
    // x(i) x(0) s^(i+1) with itself, so 0.
    const auto cfg = GBConfig::make(Mode::left_skew, 3);
    const SkewElement f = S("x(0)*s");
    for (std::uint32_t i = 1; i <= 2; ++i) {
        const SkewElement shifted = f.decorated(Sigma, i, i);
        const SkewElement lifted = Monomial(Variable{0, i}) * f.decorated(Sigma, 0, i);
        EXPECT_TRUE(spoly(lifted, Monomial(Variable{0, 0}) * shifted).is_zero());
    }
    EXPECT_EQ(render(left_gbasis({f}, cfg).basis), std::vector<std::string>{"x(0)*s"});
}

TEST(EngineTest, InterreduceDropsRedundantElement)
{
    const auto cfg = sigma6();
    const GBResult r = sigma_gbasis({P("x(2)*x(0) - x(1)")}, cfg);
    std::vector<SkewElement> G = r.basis;
    // f = x(5)x(1) - x(3)x(0)^2 turns up along the way and is redundant.
    const SkewElement f(P("x(5)*x(1) - x(3)*x(0)^2"), 0);
    EXPECT_TRUE(member(f, G, cfg));
    G.push_back(f);
    EXPECT_EQ(render(interreduce(G, cfg)), difference_basis());
    EXPECT_EQ(render(interreduce(r.basis, cfg)), difference_basis());
    EXPECT_EQ(render(interreduce({S("x(1)"), S("x(3)*x(1)")}, GBConfig::make(Mode::two_sided_skew, 2))),
              std::vector<std::string>{"x(1)"});
}

TEST(EngineTest, Membership)
{
    const auto cfg = GBConfig::make(Mode::sigma_ideal, 7);
    const GBResult r = sigma_gbasis({P("x(2)*x(0) - x(1)")}, cfg);
    const std::vector<Polynomial> G = r.polynomials();
    EXPECT_TRUE(member(P("x(2)*x(0) - x(1)") * Monomial(Variable{0, 7}), G, cfg));
    EXPECT_FALSE(member(P("x(1)"), G, cfg));
    EXPECT_TRUE(member(Polynomial(MonomialOrder::lex()), G, cfg));
    EXPECT_THROW(member(P("x(8)"), G, cfg), WindowError);
    EXPECT_THROW(member(S("x(0)*s^9"), r.basis, GBConfig::make(Mode::two_sided_skew, 7)), WindowError);
}

TEST(EngineTest, ReductionLogRebuildsTheDifference)
{
    const auto cfg = sigma6();
    const GBResult r = sigma_gbasis({P("x(2)*x(0) - x(1)")}, cfg);
    gen::Rng rng(41);
    const gen::Shape shape{1, 6, 4};
    const auto window = window_leading_monomials(r.basis, cfg);
    for (int k = 0; k < 200; ++k) {
        const SkewElement f(gen::polynomial(rng, Field::rationals(), MonomialOrder::lex(), shape, 5), 0);
        ReductionLog log;
        const SkewElement h = reduce(f, r.basis, cfg, &log);
        SkewElement sum(MonomialOrder::lex());
        for (const auto &step : log) {
            const SkewElement g = r.basis.at(step.index).monic().decorated(Sigma, step.shift, step.offset);
            const SkewElement part = (step.quotient * g) * step.coeff;
            // Gröbner representation: no summand rises above lm(f).
            EXPECT_TRUE(compare(lm_skew(part), lm_skew(f), MonomialOrder::lex()) <= 0);
            sum = sum + part;
        }
        EXPECT_EQ(f - h, sum);
        for (const auto &t : h.top().terms()) {
            EXPECT_FALSE(lm_ideal_contains(window, SkewMonomial{t.mono, 0}));
        }
    }
}

TEST(EngineTest, LeadingMonomialsOfShiftsAreShiftsOfLeadingMonomials)
{
    const auto cfg = sigma6();
    const GBResult r = sigma_gbasis({P("x(2)*x(0) - x(1)")}, cfg);
    for (const auto &g : r.basis) {
        for (std::uint32_t i = 0; i <= 4; ++i) {
            EXPECT_EQ(g.decorated(Sigma, i, 0).top().leading_monomial(), Sigma.apply(g.top().leading_monomial(), i));
        }
    }
}

TEST(EngineTest, OutputDoesNotDependOnThreadCount)
{
    gen::Rng rng(5);
    const gen::Shape shape{2, 2, 3};
    const Field F = Field::prime_field(32003);
    for (int k = 0; k < 10; ++k) {
        std::vector<Polynomial> H;
        for (int j = 0; j < 3; ++j) {
            H.push_back(gen::nonzero_polynomial(rng, F, MonomialOrder::deglex(), shape, 3, 1));
        }
        auto one = GBConfig::make(Mode::sigma_ideal, 4, MonomialOrder::deglex());
        auto four = one;
        four.threads = 4;
        const GBResult a = sigma_gbasis(H, one), b = sigma_gbasis(H, four);
        EXPECT_EQ(a.basis, b.basis);
        EXPECT_EQ(a.stats.to_string(), b.stats.to_string());
    }
}

TEST(EngineTest, ConstantInputGivesTheUnitIdeal)
{
    const GBResult r = sigma_gbasis({P("x(1) - x(0)"), P("3")}, sigma6());
    EXPECT_TRUE(r.unit_ideal);
    EXPECT_EQ(render(r.polynomials()), std::vector<std::string>{"1"});
}

TEST(EngineTest, ConfigurationErrors)
{
    GBConfig cfg = sigma6();
    cfg.degree_bound.reset();
    EXPECT_THROW(sigma_gbasis({P("x(0)")}, cfg), ConfigError);
    EXPECT_THROW(skew_gbasis({}, sigma6()), ConfigError);
    GBConfig product = GBConfig::make(Mode::two_sided_skew, 3);
    product.product_criterion = true;
    EXPECT_THROW(skew_gbasis({}, product), ConfigError);
    EXPECT_THROW(sigma_gbasis({}, GBConfig::make(Mode::sigma_ideal, 3, MonomialOrder::lex(), MonomialEndomorphism::power(2))),
                 ConfigError);
    EXPECT_THROW(skew_gbasis({S("x(0)*s + x(1)")}, GBConfig::make(Mode::two_sided_skew, 3)), DomainError);
    EXPECT_THROW(sigma_gbasis({P("x(0)", MonomialOrder::deglex())}, sigma6()), ConfigError);
}

TEST(EngineTest, IncompatibleEndomorphismsAreRefused)
{
    const Monomial x10(Variable{0, 0}), x11(Variable{1, 0});
    const auto overlap = MonomialEndomorphism::table({{Variable{0, 0}, x10 * x11}, {Variable{1, 0}, x11}});
    EXPECT_THROW(skew_gbasis({}, GBConfig::make(Mode::two_sided_skew, 3, MonomialOrder::lex(), overlap)), RefusalError);
    const auto scaled = MonomialEndomorphism::table({{Variable{0, 0}, Monomial(Variable{0, 1}, 3)}});
    EXPECT_THROW(left_gbasis({}, GBConfig::make(Mode::left_skew, 3, MonomialOrder::deglex(), scaled)), RefusalError);
    EXPECT_NO_THROW(left_gbasis({}, GBConfig::make(Mode::left_skew, 3, MonomialOrder::lex(), scaled)));
}

TEST(EngineTest, TraceHasOneLinePerPair)
{
    GBConfig cfg = sigma6();
    std::vector<std::string> lines;
    cfg.trace = [&](const std::string &l) { lines.push_back(l); };
    const GBResult r = sigma_gbasis({P("x(2)*x(0) - x(1)")}, cfg);
    EXPECT_EQ(lines.size(), r.stats.considered);
}

TEST(EngineTest, InputsAboveTheWindowAreDropped)
{
    const GBResult r = sigma_gbasis({P("x(9) - x(0)"), P("x(1)")}, GBConfig::make(Mode::sigma_ideal, 3));
    EXPECT_EQ(r.stats.inputs_outside_window, 1u);
    EXPECT_EQ(r.warnings.size(), 1u);
    EXPECT_EQ(render(r.polynomials()), std::vector<std::string>{"x(1)"});
}
