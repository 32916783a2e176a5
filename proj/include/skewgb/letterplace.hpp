#ifndef SKEWGB_LETTERPLACE_HPP
#define SKEWGB_LETTERPLACE_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <skewgb/engine.hpp>
#include <skewgb/format.hpp>

namespace skewgb
{

// A word in the letters 0, 1, ...; the empty word is 1.
struct Word {
    std::vector<std::uint32_t> letters;

    std::size_t size() const noexcept
    {
        return letters.size();
    }

    friend Word operator*(const Word &u, const Word &v)
    {
        Word w = u;
        w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
        return w;
    }

    friend bool operator==(const Word &, const Word &) = default;
};

// The order induced through x_i -> x_i(1) s on words: length first, then
// letters compared from the right end. lex and deglex on P induce the same
// order here since all words of one length have the same degree.
inline std::strong_ordering compare(const Word &u, const Word &v) noexcept
{
    if (auto c = u.size() <=> v.size(); c != 0) {
        return c;
    }
    for (std::size_t k = u.size(); k-- > 0;) {
        if (auto c = u.letters[k] <=> v.letters[k]; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

struct FreeTerm {
    FieldElement coeff;
    Word word;
    friend bool operator==(const FreeTerm &, const FreeTerm &) = default;
};

// An element of the free algebra K<X>: terms strictly descending under the
// induced word order.
class FreePolynomial
{
public:
    FreePolynomial() = default;

    static FreePolynomial from_terms(std::vector<FreeTerm> terms)
    {
        std::stable_sort(terms.begin(), terms.end(),
                         [](const FreeTerm &a, const FreeTerm &b) { return compare(a.word, b.word) > 0; });
        FreePolynomial f;
        for (auto &t : terms) {
            if (!f.m_terms.empty() && f.m_terms.back().word == t.word) {
                f.m_terms.back().coeff += t.coeff;
                if (f.m_terms.back().coeff.is_zero()) {
                    f.m_terms.pop_back();
                }
            } else if (!t.coeff.is_zero()) {
                f.m_terms.push_back(std::move(t));
            }
        }
        return f;
    }

    static FreePolynomial word(FieldElement c, Word w)
    {
        return from_terms({FreeTerm{std::move(c), std::move(w)}});
    }

    const std::vector<FreeTerm> &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }

    const FreeTerm &leading_term() const
    {
        if (m_terms.empty()) {
            throw DomainError("leading term of the zero free polynomial");
        }
        return m_terms.front();
    }

    // Largest word length (0 for zero).
    std::size_t degree() const noexcept
    {
        return m_terms.empty() ? 0 : m_terms.front().word.size();
    }

    bool is_homogeneous() const noexcept
    {
        return std::all_of(m_terms.begin(), m_terms.end(),
                           [&](const FreeTerm &t) { return t.word.size() == m_terms.front().word.size(); });
    }

    FreePolynomial monic() const
    {
        if (is_zero() || leading_term().coeff.is_one()) {
            return *this;
        }
        return *this * leading_term().coeff.inverse();
    }

    FreePolynomial operator-() const
    {
        FreePolynomial out = *this;
        for (auto &t : out.m_terms) {
            t.coeff = -t.coeff;
        }
        return out;
    }

    friend FreePolynomial operator+(const FreePolynomial &f, const FreePolynomial &g)
    {
        std::vector<FreeTerm> ts = f.m_terms;
        ts.insert(ts.end(), g.m_terms.begin(), g.m_terms.end());
        return from_terms(std::move(ts));
    }
    friend FreePolynomial operator-(const FreePolynomial &f, const FreePolynomial &g)
    {
        return f + (-g);
    }
    friend FreePolynomial operator*(const FreePolynomial &f, const FieldElement &c)
    {
        std::vector<FreeTerm> ts;
        for (const auto &t : f.m_terms) {
            ts.push_back({t.coeff * c, t.word});
        }
        return from_terms(std::move(ts));
    }
    friend FreePolynomial operator*(const FreePolynomial &f, const FreePolynomial &g)
    {
        std::vector<FreeTerm> ts;
        for (const auto &a : f.m_terms) {
            for (const auto &b : g.m_terms) {
                ts.push_back({a.coeff * b.coeff, a.word * b.word});
            }
        }
        return from_terms(std::move(ts));
    }

    friend bool operator==(const FreePolynomial &, const FreePolynomial &) = default;

private:
    std::vector<FreeTerm> m_terms;
};

inline std::string to_string(const Word &w, const Alphabet &a)
{
    if (w.letters.empty()) {
        return "1";
    }
    std::string out;
    for (auto l : w.letters) {
        if (!out.empty()) {
            out += '*';
        }
        out += a.name(l);
    }
    return out;
}

inline std::string to_string(const FreePolynomial &f, const Alphabet &a)
{
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto &t : f.terms()) {
        detail::append_term(out, t.coeff, t.word.letters.empty() ? std::string() : to_string(t.word, a));
    }
    return out;
}

// x_{i1}(1) ... x_{id}(d).
inline Monomial letterplace_monomial(const Word &w)
{
    std::vector<Monomial::Factor> fs;
    for (std::size_t k = 0; k < w.size(); ++k) {
        fs.push_back({Variable{w.letters[k], static_cast<std::uint32_t>(k + 1)}, 1});
    }
    return Monomial(std::move(fs));
}

inline SkewMonomial iota(const Word &w)
{
    return {letterplace_monomial(w), static_cast<std::uint32_t>(w.size())};
}

inline SkewElement iota(const FreePolynomial &f, MonomialOrder ord)
{
    std::map<std::uint32_t, std::vector<Term>> pieces;
    for (const auto &t : f.terms()) {
        pieces[static_cast<std::uint32_t>(t.word.size())].push_back({t.coeff, letterplace_monomial(t.word)});
    }
    std::vector<SkewElement::Component> cs;
    for (auto &[d, ts] : pieces) {
        cs.emplace_back(d, Polynomial::from_terms(ord, std::move(ts)));
    }
    return SkewElement::from_components(ord, std::move(cs));
}

inline Polynomial iota_prime(const FreePolynomial &f, MonomialOrder ord)
{
    std::vector<Term> ts;
    for (const auto &t : f.terms()) {
        ts.push_back({t.coeff, letterplace_monomial(t.word)});
    }
    return Polynomial::from_terms(ord, std::move(ts));
}

inline bool in_V(const Monomial &m)
{
    return m.multidegree().is_ones(m.degree());
}

// Every monomial of multidegree 1^d, d its degree.
inline bool in_V(const Polynomial &f)
{
    return std::all_of(f.terms().begin(), f.terms().end(), [](const Term &t) { return in_V(t.mono); });
}

// Every s-degree-i component of multidegree 1^i.
inline bool in_R(const SkewElement &a)
{
    for (const auto &[i, f] : a.components()) {
        for (const auto &t : f.terms()) {
            if (!t.mono.multidegree().is_ones(i)) {
                return false;
            }
        }
    }
    return true;
}

inline Word word_of(const Monomial &m)
{
    if (!in_V(m)) {
        throw DomainError("monomial is not of the form x_i1(1)...x_id(d)");
    }
    Word w;
    for (const auto &f : m.factors()) {
        w.letters.push_back(f.var.letter);
    }
    return w;
}

inline FreePolynomial iota_prime_inv(const Polynomial &f)
{
    std::vector<FreeTerm> ts;
    for (const auto &t : f.terms()) {
        ts.push_back({t.coeff, word_of(t.mono)});
    }
    return FreePolynomial::from_terms(std::move(ts));
}

inline FreePolynomial iota_inv(const SkewElement &a)
{
    if (!in_R(a)) {
        throw DomainError("skew element is not in the image of the letterplace embedding");
    }
    FreePolynomial out;
    for (const auto &[i, f] : a.components()) {
        out = out + iota_prime_inv(f);
    }
    return out;
}

// s -> 1.
inline Polynomial pi(const SkewElement &a)
{
    Polynomial out(a.order());
    for (const auto &[i, f] : a.components()) {
        out += f;
    }
    return out;
}

// Splits f into weight-homogeneous pieces f_i and returns sum f_i s^i.
// Constants have weight -inf and are rejected.
inline SkewElement xi(const Polynomial &f)
{
    std::map<std::uint32_t, std::vector<Term>> pieces;
    for (const auto &t : f.terms()) {
        const Weight w = t.mono.weight();
        if (w.is_minus_infinity()) {
            throw DomainError("xi is undefined on a nonzero constant part");
        }
        pieces[w.value()].push_back(t);
    }
    std::vector<SkewElement::Component> cs;
    for (auto &[i, ts] : pieces) {
        cs.emplace_back(i, Polynomial::from_terms(f.order(), std::move(ts)));
    }
    return SkewElement::from_components(f.order(), std::move(cs));
}

// f s^w(f): the generator used to run a sigma-ideal through the skew side.
inline SkewElement lift_by_weight(const Polynomial &f)
{
    const Weight w = f.weight();
    if (w.is_minus_infinity()) {
        throw DomainError("cannot lift a constant by its weight");
    }
    return SkewElement(f, w.value());
}

struct FreeResult {
    std::vector<FreePolynomial> basis;
    GBResult engine;
};

namespace detail
{

inline void check_free_inputs(const std::vector<FreePolynomial> &H)
{
    for (const auto &h : H) {
        if (h.is_zero()) {
            continue;
        }
        if (!h.is_homogeneous()) {
            throw DomainError("free algebra inputs must be homogeneous");
        }
        if (h.degree() == 0) {
            throw DomainError("free algebra inputs must have degree >= 1");
        }
    }
}

// Monic, sorted by degree, then leading word descending.
inline std::vector<FreePolynomial> normalize_free(std::vector<FreePolynomial> G)
{
    for (auto &g : G) {
        g = g.monic();
    }
    std::stable_sort(G.begin(), G.end(), [](const FreePolynomial &a, const FreePolynomial &b) {
        if (a.degree() != b.degree()) {
            return a.degree() < b.degree();
        }
        return compare(a.leading_term().word, b.leading_term().word) > 0;
    });
    return G;
}

} // namespace detail

// Through sigma-ideals of P: iota'(H), pairs filtered to V.
inline FreeResult free_gbasis(const std::vector<FreePolynomial> &H, GBConfig cfg)
{
    detail::check_free_inputs(H);
    cfg.mode = Mode::sigma_ideal;
    cfg.filter = PairFilter::in_V;
    cfg.endo = MonomialEndomorphism::shift();
    cfg.interreduce = true;
    std::vector<Polynomial> P;
    for (const auto &h : H) {
        if (!h.is_zero()) {
            P.push_back(iota_prime(h, cfg.order));
        }
    }
    FreeResult out;
    out.engine = sigma_gbasis(P, cfg);
    for (const auto &g : out.engine.basis) {
        out.basis.push_back(iota_prime_inv(g.component(0)));
    }
    out.basis = detail::normalize_free(std::move(out.basis));
    return out;
}

// Through two-sided ideals of S: iota(H), pairs filtered to R.
inline FreeResult free_gbasis2(const std::vector<FreePolynomial> &H, GBConfig cfg)
{
    detail::check_free_inputs(H);
    cfg.mode = Mode::two_sided_skew;
    cfg.filter = PairFilter::in_R;
    cfg.endo = MonomialEndomorphism::shift();
    cfg.product_criterion = false;
    cfg.interreduce = true;
    std::vector<SkewElement> S;
    for (const auto &h : H) {
        if (!h.is_zero()) {
            S.push_back(iota(h, cfg.order));
        }
    }
    FreeResult out;
    out.engine = skew_gbasis(std::move(S), cfg);
    for (const auto &g : out.engine.basis) {
        out.basis.push_back(iota_inv(g));
    }
    out.basis = detail::normalize_free(std::move(out.basis));
    return out;
}

// Words of length 1..d whose image iota'(w) lies in the lm-ideal spanned by
// gens at s-degree 0 (sigma side) or iota(w) at s-degree |w| (skew side).
inline std::vector<Word> words_in_lm_ideal(const std::vector<SkewMonomial> &gens, std::uint32_t letters,
                                           std::uint32_t d, bool skew_side)
{
    std::vector<Word> out;
    std::vector<Word> layer{Word{}};
    for (std::uint32_t len = 1; len <= d; ++len) {
        std::vector<Word> next;
        for (const auto &w : layer) {
            for (std::uint32_t l = 0; l < letters; ++l) {
                Word v = w;
                v.letters.push_back(l);
                SkewMonomial m = iota(v);
                if (!skew_side) {
                    m.sdeg = 0;
                }
                if (std::any_of(gens.begin(), gens.end(), [&](const SkewMonomial &g) {
                        return g.sdeg == m.sdeg && g.mono.divides(m.mono);
                    })) {
                    out.push_back(v);
                }
                next.push_back(std::move(v));
            }
        }
        layer = std::move(next);
    }
    return out;
}

} // namespace skewgb

#endif
