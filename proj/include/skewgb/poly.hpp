#ifndef SKEWGB_POLY_HPP
#define SKEWGB_POLY_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <skewgb/error.hpp>
#include <skewgb/field.hpp>

namespace skewgb
{

// The variable x_letter(place). Variables are well-ordered place-major,
// letter-minor: x1(0) < x2(0) < x1(1) < ...
struct Variable {
    std::uint32_t letter = 0;
    std::uint32_t place = 0;

    friend constexpr bool operator==(const Variable &, const Variable &) = default;
    friend constexpr std::strong_ordering operator<=>(const Variable &a, const Variable &b) noexcept
    {
        if (auto c = a.place <=> b.place; c != 0) {
            return c;
        }
        return a.letter <=> b.letter;
    }
};

// Weight in {-inf} u N. The bottom element -inf is a tag, never an integer.
class Weight
{
public:
    constexpr Weight() noexcept = default;
    constexpr explicit Weight(std::uint32_t v) noexcept : m_finite(true), m_value(v) {}

    static constexpr Weight minus_infinity() noexcept
    {
        return Weight{};
    }

    constexpr bool is_minus_infinity() const noexcept
    {
        return !m_finite;
    }
    // Precondition: finite.
    constexpr std::uint32_t value() const
    {
        if (!m_finite) {
            throw DomainError("value() of weight -inf");
        }
        return m_value;
    }

    friend constexpr Weight max(Weight a, Weight b) noexcept
    {
        return a < b ? b : a;
    }
    // -inf is absorbing for +.
    friend constexpr Weight operator+(Weight a, std::uint32_t k) noexcept
    {
        return a.m_finite ? Weight(a.m_value + k) : a;
    }

    friend constexpr bool operator==(const Weight &, const Weight &) = default;
    friend constexpr std::strong_ordering operator<=>(const Weight &a, const Weight &b) noexcept
    {
        if (a.m_finite != b.m_finite) {
            return a.m_finite ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return a.m_finite ? a.m_value <=> b.m_value : std::strong_ordering::equal;
    }

    std::string to_string() const
    {
        return m_finite ? std::to_string(m_value) : std::string("-inf");
    }

private:
    bool m_finite = false;
    std::uint32_t m_value = 0;
};

// Multidegree: place -> number of variable occurrences at that place
// (with multiplicity). Only nonzero counts are stored, ascending by place.
class Multidegree
{
public:
    Multidegree() = default;
    explicit Multidegree(std::vector<std::pair<std::uint32_t, std::uint32_t>> counts) : m_counts(std::move(counts)) {}

    const auto &counts() const noexcept
    {
        return m_counts;
    }

    std::uint32_t at(std::uint32_t place) const noexcept
    {
        auto it = std::lower_bound(m_counts.begin(), m_counts.end(), place,
                                   [](const auto &e, std::uint32_t p) { return e.first < p; });
        return (it != m_counts.end() && it->first == place) ? it->second : 0;
    }

    std::uint32_t total() const noexcept
    {
        std::uint32_t t = 0;
        for (const auto &e : m_counts) {
            t += e.second;
        }
        return t;
    }

    // The multidegree 1^i: exactly one variable at each place 1..i.
    static Multidegree ones(std::uint32_t i)
    {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> c;
        for (std::uint32_t k = 1; k <= i; ++k) {
            c.emplace_back(k, 1);
        }
        return Multidegree(std::move(c));
    }

    bool is_ones(std::uint32_t i) const noexcept
    {
        if (m_counts.size() != i) {
            return false;
        }
        for (std::uint32_t k = 0; k < i; ++k) {
            if (m_counts[k].first != k + 1 || m_counts[k].second != 1) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const Multidegree &, const Multidegree &) = default;

private:
    std::vector<std::pair<std::uint32_t, std::uint32_t>> m_counts;
};

// A monomial of P = K[X x N]: sparse exponents, variables ascending.
class Monomial
{
public:
    struct Factor {
        Variable var;
        std::uint32_t exp;
        friend bool operator==(const Factor &, const Factor &) = default;
    };

    Monomial() = default;
    explicit Monomial(Variable v, std::uint32_t e = 1)
    {
        if (e != 0) {
            m_factors.push_back({v, e});
        }
    }
    Monomial(std::initializer_list<Factor> fs) : Monomial(std::vector<Factor>(fs)) {}
    // Arbitrary order, repeats allowed; zero exponents dropped.
    explicit Monomial(std::vector<Factor> fs)
    {
        std::sort(fs.begin(), fs.end(), [](const Factor &a, const Factor &b) { return a.var < b.var; });
        for (const auto &f : fs) {
            if (f.exp == 0) {
                continue;
            }
            if (!m_factors.empty() && m_factors.back().var == f.var) {
                m_factors.back().exp += f.exp;
            } else {
                m_factors.push_back(f);
            }
        }
    }

    const std::vector<Factor> &factors() const noexcept
    {
        return m_factors;
    }
    bool is_one() const noexcept
    {
        return m_factors.empty();
    }

    std::uint32_t degree() const noexcept
    {
        std::uint32_t d = 0;
        for (const auto &f : m_factors) {
            d += f.exp;
        }
        return d;
    }

    std::uint32_t exponent(Variable v) const noexcept
    {
        for (const auto &f : m_factors) {
            if (f.var == v) {
                return f.exp;
            }
        }
        return 0;
    }

    // w(1) = -inf, otherwise the largest place.
    Weight weight() const noexcept
    {
        return m_factors.empty() ? Weight::minus_infinity() : Weight(m_factors.back().var.place);
    }

    Multidegree multidegree() const
    {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> c;
        for (const auto &f : m_factors) {
            if (!c.empty() && c.back().first == f.var.place) {
                c.back().second += f.exp;
            } else {
                c.emplace_back(f.var.place, f.exp);
            }
        }
        return Multidegree(std::move(c));
    }

    // Places all shifted by k.
    Monomial shifted(std::uint32_t k) const
    {
        Monomial out = *this;
        for (auto &f : out.m_factors) {
            f.var.place += k;
        }
        return out;
    }

    friend Monomial operator*(const Monomial &a, const Monomial &b)
    {
        Monomial out;
        out.m_factors.reserve(a.m_factors.size() + b.m_factors.size());
        auto i = a.m_factors.begin(), j = b.m_factors.begin();
        while (i != a.m_factors.end() && j != b.m_factors.end()) {
            if (i->var < j->var) {
                out.m_factors.push_back(*i++);
            } else if (j->var < i->var) {
                out.m_factors.push_back(*j++);
            } else {
                out.m_factors.push_back({i->var, i->exp + j->exp});
                ++i;
                ++j;
            }
        }
        out.m_factors.insert(out.m_factors.end(), i, a.m_factors.end());
        out.m_factors.insert(out.m_factors.end(), j, b.m_factors.end());
        return out;
    }

    // Exponentwise <=.
    bool divides(const Monomial &n) const noexcept
    {
        if (m_factors.size() > n.m_factors.size()) {
            return false;
        }
        auto j = n.m_factors.begin();
        for (const auto &f : m_factors) {
            while (j != n.m_factors.end() && j->var < f.var) {
                ++j;
            }
            if (j == n.m_factors.end() || j->var != f.var || j->exp < f.exp) {
                return false;
            }
            ++j;
        }
        return true;
    }

    // n / *this. Throws unless *this divides n.
    Monomial quotient_of(const Monomial &n) const
    {
        Monomial out;
        auto i = m_factors.begin();
        for (const auto &g : n.m_factors) {
            if (i != m_factors.end() && i->var == g.var) {
                if (i->exp > g.exp) {
                    throw DomainError("monomial quotient is not exact");
                }
                if (i->exp < g.exp) {
                    out.m_factors.push_back({g.var, g.exp - i->exp});
                }
                ++i;
            } else {
                if (i != m_factors.end() && i->var < g.var) {
                    throw DomainError("monomial quotient is not exact");
                }
                out.m_factors.push_back(g);
            }
        }
        if (i != m_factors.end()) {
            throw DomainError("monomial quotient is not exact");
        }
        return out;
    }

    bool coprime(const Monomial &o) const noexcept
    {
        auto i = m_factors.begin(), j = o.m_factors.begin();
        while (i != m_factors.end() && j != o.m_factors.end()) {
            if (i->var < j->var) {
                ++i;
            } else if (j->var < i->var) {
                ++j;
            } else {
                return false;
            }
        }
        return true;
    }

    friend Monomial gcd(const Monomial &a, const Monomial &b)
    {
        Monomial out;
        auto i = a.m_factors.begin(), j = b.m_factors.begin();
        while (i != a.m_factors.end() && j != b.m_factors.end()) {
            if (i->var < j->var) {
                ++i;
            } else if (j->var < i->var) {
                ++j;
            } else {
                out.m_factors.push_back({i->var, std::min(i->exp, j->exp)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    friend Monomial lcm(const Monomial &a, const Monomial &b)
    {
        Monomial out;
        auto i = a.m_factors.begin(), j = b.m_factors.begin();
        while (i != a.m_factors.end() && j != b.m_factors.end()) {
            if (i->var < j->var) {
                out.m_factors.push_back(*i++);
            } else if (j->var < i->var) {
                out.m_factors.push_back(*j++);
            } else {
                out.m_factors.push_back({i->var, std::max(i->exp, j->exp)});
                ++i;
                ++j;
            }
        }
        out.m_factors.insert(out.m_factors.end(), i, a.m_factors.end());
        out.m_factors.insert(out.m_factors.end(), j, b.m_factors.end());
        return out;
    }

    friend bool operator==(const Monomial &, const Monomial &) = default;

    std::size_t hash() const noexcept
    {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (const auto &f : m_factors) {
            h ^= (std::size_t(f.var.place) * 0x100000001b3ull + f.var.letter * 31 + f.exp) + (h << 6) + (h >> 2);
        }
        return h;
    }

private:
    std::vector<Factor> m_factors;
};

// Monomial ordering on Mon(P) over the fixed variable well-order. lex compares
// the exponents of the largest variables first; deglex compares total degree
// and breaks ties by lex.
class MonomialOrder
{
public:
    enum class Kind { lex, deglex };

    constexpr MonomialOrder() noexcept = default;
    constexpr explicit MonomialOrder(Kind k) noexcept : m_kind(k) {}

    static constexpr MonomialOrder lex() noexcept
    {
        return MonomialOrder(Kind::lex);
    }
    static constexpr MonomialOrder deglex() noexcept
    {
        return MonomialOrder(Kind::deglex);
    }

    constexpr Kind kind() const noexcept
    {
        return m_kind;
    }

    std::string name() const
    {
        return m_kind == Kind::lex ? "lex" : "deglex";
    }

    std::strong_ordering compare(const Monomial &m, const Monomial &n) const noexcept
    {
        if (m_kind == Kind::deglex) {
            if (auto c = m.degree() <=> n.degree(); c != 0) {
                return c;
            }
        }
        return compare_lex(m, n);
    }

    bool less(const Monomial &m, const Monomial &n) const noexcept
    {
        return compare(m, n) < 0;
    }

    friend constexpr bool operator==(const MonomialOrder &, const MonomialOrder &) = default;

private:
    static std::strong_ordering compare_lex(const Monomial &m, const Monomial &n) noexcept
    {
        const auto &a = m.factors();
        const auto &b = n.factors();
        auto i = a.rbegin(), j = b.rbegin();
        for (; i != a.rend() && j != b.rend(); ++i, ++j) {
            if (i->var != j->var) {
                return i->var <=> j->var;
            }
            if (i->exp != j->exp) {
                return i->exp <=> j->exp;
            }
        }
        if (i != a.rend()) {
            return std::strong_ordering::greater;
        }
        if (j != b.rend()) {
            return std::strong_ordering::less;
        }
        return std::strong_ordering::equal;
    }

    Kind m_kind = Kind::lex;
};

struct Term {
    FieldElement coeff;
    Monomial mono;
    friend bool operator==(const Term &, const Term &) = default;
};

// A polynomial of P: nonzero terms with distinct monomials, strictly
// descending under the polynomial's ordering.
class Polynomial
{
public:
    Polynomial() = default;
    explicit Polynomial(MonomialOrder ord) : m_order(ord) {}

    // Sorts and combines like terms; zero coefficients dropped.
    static Polynomial from_terms(MonomialOrder ord, std::vector<Term> terms)
    {
        Polynomial p(ord);
        std::sort(terms.begin(), terms.end(),
                  [&](const Term &a, const Term &b) { return ord.compare(a.mono, b.mono) > 0; });
        for (auto &t : terms) {
            if (!p.m_terms.empty() && p.m_terms.back().mono == t.mono) {
                p.m_terms.back().coeff += t.coeff;
                if (p.m_terms.back().coeff.is_zero()) {
                    p.m_terms.pop_back();
                }
            } else if (!t.coeff.is_zero()) {
                p.m_terms.push_back(std::move(t));
            }
        }
        return p;
    }

    static Polynomial monomial(MonomialOrder ord, FieldElement c, Monomial m)
    {
        Polynomial p(ord);
        if (!c.is_zero()) {
            p.m_terms.push_back({std::move(c), std::move(m)});
        }
        return p;
    }

    static Polynomial constant(MonomialOrder ord, FieldElement c)
    {
        return monomial(ord, std::move(c), Monomial{});
    }

    MonomialOrder order() const noexcept
    {
        return m_order;
    }
    const std::vector<Term> &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    std::size_t size() const noexcept
    {
        return m_terms.size();
    }

    bool is_constant() const noexcept
    {
        return m_terms.size() == 1 && m_terms.front().mono.is_one();
    }

    const Term &leading_term() const
    {
        if (m_terms.empty()) {
            throw DomainError("leading term of the zero polynomial");
        }
        return m_terms.front();
    }
    const Monomial &leading_monomial() const
    {
        return leading_term().mono;
    }
    const FieldElement &leading_coefficient() const
    {
        return leading_term().coeff;
    }

    // Max weight over the support (-inf for constants and zero).
    Weight weight() const noexcept
    {
        Weight w;
        for (const auto &t : m_terms) {
            w = max(w, t.mono.weight());
        }
        return w;
    }

    bool is_w_homogeneous() const noexcept
    {
        for (const auto &t : m_terms) {
            if (t.mono.weight() != m_terms.front().mono.weight()) {
                return false;
            }
        }
        return true;
    }

    bool is_homogeneous() const noexcept
    {
        for (const auto &t : m_terms) {
            if (t.mono.degree() != m_terms.front().mono.degree()) {
                return false;
            }
        }
        return true;
    }

    Polynomial monic() const
    {
        if (is_zero() || leading_coefficient().is_one()) {
            return *this;
        }
        return *this * leading_coefficient().inverse();
    }

    void drop_leading()
    {
        m_terms.erase(m_terms.begin());
    }

    // Appends a term smaller than all present ones.
    void push_back_smallest(Term t)
    {
        m_terms.push_back(std::move(t));
    }

    Polynomial operator-() const
    {
        Polynomial out = *this;
        for (auto &t : out.m_terms) {
            t.coeff = -t.coeff;
        }
        return out;
    }

    friend Polynomial operator*(const Polynomial &f, const FieldElement &c)
    {
        Polynomial out(f.m_order);
        if (c.is_zero()) {
            return out;
        }
        out.m_terms.reserve(f.m_terms.size());
        for (const auto &t : f.m_terms) {
            out.m_terms.push_back({t.coeff * c, t.mono});
        }
        return out;
    }

    friend Polynomial operator*(const Polynomial &f, const Monomial &m)
    {
        Polynomial out(f.m_order);
        out.m_terms.reserve(f.m_terms.size());
        for (const auto &t : f.m_terms) {
            out.m_terms.push_back({t.coeff, t.mono * m});
        }
        return out;
    }

    friend Polynomial operator+(const Polynomial &f, const Polynomial &g)
    {
        return combine(f, g, nullptr, nullptr, false);
    }
    friend Polynomial operator-(const Polynomial &f, const Polynomial &g)
    {
        return combine(f, g, nullptr, nullptr, true);
    }
    Polynomial &operator+=(const Polynomial &g)
    {
        return *this = *this + g;
    }
    Polynomial &operator-=(const Polynomial &g)
    {
        return *this = *this - g;
    }

    // *this - c * m * g in one merge pass.
    void sub_mul(const FieldElement &c, const Monomial &m, const Polynomial &g)
    {
        *this = combine(*this, g, &c, &m, true);
    }

    friend Polynomial operator*(const Polynomial &f, const Polynomial &g)
    {
        check_orders(f, g);
        std::vector<Term> prods;
        prods.reserve(f.size() * g.size());
        for (const auto &a : f.m_terms) {
            for (const auto &b : g.m_terms) {
                prods.push_back({a.coeff * b.coeff, a.mono * b.mono});
            }
        }
        return from_terms(f.is_zero() ? g.m_order : f.m_order, std::move(prods));
    }

    friend bool operator==(const Polynomial &f, const Polynomial &g)
    {
        return f.m_terms == g.m_terms && (f.m_terms.empty() || f.m_order == g.m_order);
    }

private:
    static void check_orders(const Polynomial &f, const Polynomial &g)
    {
        if (!f.is_zero() && !g.is_zero() && f.m_order != g.m_order) {
            throw DomainError("polynomials under different monomial orderings");
        }
    }

    // f +/- (scale * mono * g); scale and mono optional.
    static Polynomial combine(const Polynomial &f, const Polynomial &g, const FieldElement *scale,
                              const Monomial *mono, bool subtract)
    {
        check_orders(f, g);
        const MonomialOrder ord = f.is_zero() ? g.m_order : f.m_order;
        Polynomial out(ord);
        out.m_terms.reserve(f.size() + g.size());
        auto gterm = [&](const Term &t) {
            Term r{scale ? t.coeff * *scale : t.coeff, mono ? t.mono * *mono : t.mono};
            if (subtract) {
                r.coeff = -r.coeff;
            }
            return r;
        };
        auto i = f.m_terms.begin();
        auto j = g.m_terms.begin();
        while (j != g.m_terms.end()) {
            Term b = gterm(*j);
            while (i != f.m_terms.end() && ord.compare(i->mono, b.mono) > 0) {
                out.m_terms.push_back(*i++);
            }
            if (i != f.m_terms.end() && i->mono == b.mono) {
                b.coeff += i->coeff;
                ++i;
            }
            if (!b.coeff.is_zero()) {
                out.m_terms.push_back(std::move(b));
            }
            ++j;
        }
        out.m_terms.insert(out.m_terms.end(), i, f.m_terms.end());
        return out;
    }

    MonomialOrder m_order;
    std::vector<Term> m_terms;
};

} // namespace skewgb

template <>
struct std::hash<skewgb::Monomial> {
    std::size_t operator()(const skewgb::Monomial &m) const noexcept
    {
        return m.hash();
    }
};

#endif
