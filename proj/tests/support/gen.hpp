#ifndef SKEWGB_TESTS_GEN_HPP
#define SKEWGB_TESTS_GEN_HPP

// Random instances for the property tests. Every generator takes the engine
// by reference so a failing case can be replayed from its seed.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <skewgb/skewgb.hpp>

namespace gen
{

using Rng = std::mt19937_64;
using namespace skewgb;

inline std::uint32_t uniform(Rng &rng, std::uint32_t lo, std::uint32_t hi)
{
    return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
}

inline bool coin(Rng &rng, double p = 0.5)
{
    return std::bernoulli_distribution(p)(rng);
}

struct Shape {
    std::uint32_t letters = 2;
    std::uint32_t max_place = 3;
    std::uint32_t max_degree = 3;
};

inline Variable variable(Rng &rng, const Shape &s)
{
    return {uniform(rng, 0, s.letters - 1), uniform(rng, 0, s.max_place)};
}

// Degree 0..max_degree, so 1 shows up now and then.
inline Monomial monomial(Rng &rng, const Shape &s, std::uint32_t min_degree = 0)
{
    std::vector<Monomial::Factor> fs;
    for (std::uint32_t k = uniform(rng, min_degree, s.max_degree); k > 0; --k) {
        fs.push_back({variable(rng, s), 1});
    }
    return Monomial(std::move(fs));
}

inline FieldElement scalar(Rng &rng, const Field &f)
{
    for (;;) {
        const long long v = static_cast<long long>(uniform(rng, 0, 18)) - 9;
        if (v == 0) {
            continue;
        }
        if (f.kind() == Field::Kind::rational && coin(rng, 0.25)) {
            return FieldElement::rational(v, uniform(rng, 2, 5));
        }
        return f.from_integer(v);
    }
}

inline Polynomial polynomial(Rng &rng, const Field &f, MonomialOrder ord, const Shape &s, std::uint32_t max_terms = 4,
                             std::uint32_t min_degree = 0)
{
    std::vector<Term> ts;
    for (std::uint32_t k = uniform(rng, 1, max_terms); k > 0; --k) {
        ts.push_back({scalar(rng, f), monomial(rng, s, min_degree)});
    }
    return Polynomial::from_terms(ord, std::move(ts));
}

inline Polynomial nonzero_polynomial(Rng &rng, const Field &f, MonomialOrder ord, const Shape &s,
                                     std::uint32_t max_terms = 4, std::uint32_t min_degree = 0)
{
    for (;;) {
        Polynomial p = polynomial(rng, f, ord, s, max_terms, min_degree);
        if (!p.is_zero()) {
            return p;
        }
    }
}

// A few components at s-degrees 0..max_sdeg.
inline SkewElement skew(Rng &rng, const Field &f, MonomialOrder ord, const Shape &s, std::uint32_t max_sdeg = 3,
                        std::uint32_t max_components = 2)
{
    SkewElement out(ord);
    for (std::uint32_t k = uniform(rng, 1, max_components); k > 0; --k) {
        out = out + SkewElement(polynomial(rng, f, ord, s, 3), uniform(rng, 0, max_sdeg));
    }
    return out;
}

inline SkewElement nonzero_skew(Rng &rng, const Field &f, MonomialOrder ord, const Shape &s,
                                std::uint32_t max_sdeg = 3, std::uint32_t max_components = 2)
{
    for (;;) {
        SkewElement a = skew(rng, f, ord, s, max_sdeg, max_components);
        if (!a.is_zero()) {
            return a;
        }
    }
}

inline Word word(Rng &rng, std::uint32_t letters, std::uint32_t length)
{
    Word w;
    for (std::uint32_t k = 0; k < length; ++k) {
        w.letters.push_back(uniform(rng, 0, letters - 1));
    }
    return w;
}

// Homogeneous of the given degree.
inline FreePolynomial free_homogeneous(Rng &rng, const Field &f, std::uint32_t letters, std::uint32_t degree,
                                       std::uint32_t max_terms = 3)
{
    for (;;) {
        std::vector<FreeTerm> ts;
        for (std::uint32_t k = uniform(rng, 1, max_terms); k > 0; --k) {
            ts.push_back({scalar(rng, f), word(rng, letters, degree)});
        }
        FreePolynomial p = FreePolynomial::from_terms(std::move(ts));
        if (!p.is_zero()) {
            return p;
        }
    }
}

// Not necessarily homogeneous.
inline FreePolynomial free_polynomial(Rng &rng, const Field &f, std::uint32_t letters, std::uint32_t max_degree,
                                      std::uint32_t max_terms = 3)
{
    std::vector<FreeTerm> ts;
    for (std::uint32_t k = uniform(rng, 1, max_terms); k > 0; --k) {
        ts.push_back({scalar(rng, f), word(rng, letters, uniform(rng, 0, max_degree))});
    }
    return FreePolynomial::from_terms(std::move(ts));
}

// x_l(p) -> x_l(p+1)^e for the places p below a random bound, shift above.
// Images are powers of distinct variables and x_l(p) is listed whenever
// x_l(p+1) is used, so it is div-compatible; it preserves lex since every
// variable still lands on its shifted position.
inline MonomialEndomorphism scaled_shift_table(Rng &rng, std::uint32_t letters, std::uint32_t max_exponent = 3)
{
    std::map<Variable, Monomial> images;
    const std::uint32_t places = uniform(rng, 1, 2);
    for (std::uint32_t p = 0; p < places; ++p) {
        for (std::uint32_t l = 0; l < letters; ++l) {
            images[Variable{l, p}] = Monomial(Variable{l, p + 1}, uniform(rng, 1, max_exponent));
        }
    }
    return MonomialEndomorphism::table(std::move(images));
}

} // namespace gen

#endif
