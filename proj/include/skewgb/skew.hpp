#ifndef SKEWGB_SKEW_HPP
#define SKEWGB_SKEW_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <skewgb/endo.hpp>
#include <skewgb/error.hpp>
#include <skewgb/poly.hpp>

namespace skewgb
{

// The monomial m s^sdeg of S = P[s; sigma].
struct SkewMonomial {
    Monomial mono;
    std::uint32_t sdeg = 0;

    friend bool operator==(const SkewMonomial &, const SkewMonomial &) = default;
};

// The extension of an ordering of P to Mon(S): s-degree first, then the
// ordering of P.
inline std::strong_ordering compare(const SkewMonomial &v, const SkewMonomial &w, MonomialOrder ord) noexcept
{
    if (auto c = v.sdeg <=> w.sdeg; c != 0) {
        return c;
    }
    return ord.compare(v.mono, w.mono);
}

// An element sum_i f_i s^i of S. Components are kept ascending by s-degree
// and are never zero.
class SkewElement
{
public:
    using Component = std::pair<std::uint32_t, Polynomial>;

    SkewElement() = default;
    explicit SkewElement(MonomialOrder ord) : m_order(ord) {}

    // f s^sdeg.
    SkewElement(Polynomial f, std::uint32_t sdeg) : m_order(f.order())
    {
        if (!f.is_zero()) {
            m_components.emplace_back(sdeg, std::move(f));
        }
    }

    static SkewElement from_monomial(MonomialOrder ord, FieldElement c, SkewMonomial m)
    {
        return SkewElement(Polynomial::monomial(ord, std::move(c), std::move(m.mono)), m.sdeg);
    }

    // Components ascending by s-degree, none zero; checked.
    static SkewElement from_components(MonomialOrder ord, std::vector<Component> cs)
    {
        for (std::size_t k = 0; k < cs.size(); ++k) {
            if (cs[k].second.is_zero() || (k > 0 && cs[k - 1].first >= cs[k].first)) {
                throw DomainError("malformed skew element components");
            }
        }
        SkewElement out(ord);
        out.m_components = std::move(cs);
        return out;
    }

    MonomialOrder order() const noexcept
    {
        return m_order;
    }
    const std::vector<Component> &components() const noexcept
    {
        return m_components;
    }
    bool is_zero() const noexcept
    {
        return m_components.empty();
    }
    bool is_homogeneous() const noexcept
    {
        return m_components.size() == 1;
    }

    // Precondition: nonzero.
    std::uint32_t max_sdeg() const
    {
        if (is_zero()) {
            throw DomainError("s-degree of zero");
        }
        return m_components.back().first;
    }
    std::uint32_t min_sdeg() const
    {
        if (is_zero()) {
            throw DomainError("s-degree of zero");
        }
        return m_components.front().first;
    }

    // The component at s-degree i (zero polynomial if absent).
    Polynomial component(std::uint32_t i) const
    {
        for (const auto &[d, f] : m_components) {
            if (d == i) {
                return f;
            }
        }
        return Polynomial(m_order);
    }

    // The top component, as a P-polynomial. Precondition: nonzero.
    const Polynomial &top() const
    {
        if (is_zero()) {
            throw DomainError("leading term of the zero skew element");
        }
        return m_components.back().second;
    }

    std::size_t term_count() const noexcept
    {
        std::size_t n = 0;
        for (const auto &c : m_components) {
            n += c.second.size();
        }
        return n;
    }

    SkewElement operator-() const
    {
        SkewElement out = *this;
        for (auto &c : out.m_components) {
            c.second = -c.second;
        }
        return out;
    }

    friend SkewElement operator+(const SkewElement &a, const SkewElement &b)
    {
        return merge(a, b, false);
    }
    friend SkewElement operator-(const SkewElement &a, const SkewElement &b)
    {
        return merge(a, b, true);
    }

    friend SkewElement operator*(const SkewElement &a, const FieldElement &c)
    {
        SkewElement out(a.m_order);
        if (c.is_zero()) {
            return out;
        }
        for (const auto &[d, f] : a.m_components) {
            out.m_components.emplace_back(d, f * c);
        }
        return out;
    }

    // Left action of a monomial of P: m * sum f_i s^i = sum (m f_i) s^i.
    friend SkewElement operator*(const Monomial &m, const SkewElement &a)
    {
        SkewElement out(a.m_order);
        for (const auto &[d, f] : a.m_components) {
            out.m_components.emplace_back(d, f * m);
        }
        return out;
    }

    // *this - c * m * g s^offset.
    void sub_mul(const FieldElement &c, const Monomial &m, const SkewElement &g, std::uint32_t offset = 0)
    {
        for (const auto &[d0, f] : g.m_components) {
            const std::uint32_t d = d0 + offset;
            auto it = std::lower_bound(m_components.begin(), m_components.end(), d,
                                       [](const Component &e, std::uint32_t k) { return e.first < k; });
            if (it != m_components.end() && it->first == d) {
                it->second.sub_mul(c, m, f);
                if (it->second.is_zero()) {
                    m_components.erase(it);
                }
            } else {
                Polynomial neg = -(f * m) * c;
                if (m_components.empty()) {
                    m_order = neg.order();
                }
                m_components.insert(it, Component{d, std::move(neg)});
            }
        }
    }

    void drop_leading()
    {
        auto &top = m_components.back().second;
        top.drop_leading();
        if (top.is_zero()) {
            m_components.pop_back();
        }
    }

    // Applies sigma^i to every component and raises every s-degree by t:
    // this is s^i a s^(t-i) for t >= i.
    SkewElement decorated(const MonomialEndomorphism &sigma, std::uint32_t i, std::uint32_t t) const
    {
        SkewElement out(m_order);
        for (const auto &[d, f] : m_components) {
            out.m_components.emplace_back(d + t, sigma.apply(f, i));
        }
        return out;
    }

    SkewElement monic() const;

    friend bool operator==(const SkewElement &a, const SkewElement &b)
    {
        return a.m_components == b.m_components;
    }

private:
    static SkewElement merge(const SkewElement &a, const SkewElement &b, bool subtract)
    {
        SkewElement out(a.is_zero() ? b.m_order : a.m_order);
        auto i = a.m_components.begin(), j = b.m_components.begin();
        while (i != a.m_components.end() || j != b.m_components.end()) {
            if (j == b.m_components.end() || (i != a.m_components.end() && i->first < j->first)) {
                out.m_components.push_back(*i++);
            } else if (i == a.m_components.end() || j->first < i->first) {
                out.m_components.emplace_back(j->first, subtract ? -j->second : j->second);
                ++j;
            } else {
                Polynomial s = subtract ? i->second - j->second : i->second + j->second;
                if (!s.is_zero()) {
                    out.m_components.emplace_back(i->first, std::move(s));
                }
                ++i;
                ++j;
            }
        }
        return out;
    }

    MonomialOrder m_order;
    std::vector<Component> m_components;
};

// Leading monomial under the s-degree-major extension of the ordering.
inline SkewMonomial lm_skew(const SkewElement &f)
{
    if (f.is_zero()) {
        throw DomainError("leading monomial of the zero skew element");
    }
    return {f.top().leading_monomial(), f.max_sdeg()};
}

inline const FieldElement &lc_skew(const SkewElement &f)
{
    return f.top().leading_coefficient();
}

inline SkewElement SkewElement::monic() const
{
    if (is_zero() || lc_skew(*this).is_one()) {
        return *this;
    }
    return *this * lc_skew(*this).inverse();
}

// (f s^i)(g s^j) = f sigma^i(g) s^(i+j), extended bilinearly.
inline SkewElement skew_mul(const SkewElement &a, const SkewElement &b, const MonomialEndomorphism &sigma)
{
    SkewElement out(a.is_zero() ? b.order() : a.order());
    for (const auto &[i, f] : a.components()) {
        for (const auto &[j, g] : b.components()) {
            out = out + SkewElement(f * sigma.apply(g, i), i + j);
        }
    }
    return out;
}

// Quotient a with w = a v, if any: needs i <= j and sigma^(j-i)(m) | n for
// v = m s^i, w = n s^j.
inline std::optional<SkewMonomial> left_divides(const SkewMonomial &v, const SkewMonomial &w,
                                                const MonomialEndomorphism &sigma)
{
    if (v.sdeg > w.sdeg) {
        return std::nullopt;
    }
    const std::uint32_t k = w.sdeg - v.sdeg;
    const Monomial image = sigma.apply(v.mono, k);
    if (!image.divides(w.mono)) {
        return std::nullopt;
    }
    return SkewMonomial{image.quotient_of(w.mono), k};
}

// Quotient a in Mon(P) with w = a v, s-degrees equal.
inline std::optional<Monomial> p_divides(const SkewMonomial &v, const SkewMonomial &w)
{
    if (v.sdeg != w.sdeg || !v.mono.divides(w.mono)) {
        return std::nullopt;
    }
    return v.mono.quotient_of(w.mono);
}

struct TwoSidedQuotient {
    std::uint32_t left = 0;  // i in w = q s^i v s^j
    std::uint32_t right = 0; // j
    Monomial factor;         // q

    friend bool operator==(const TwoSidedQuotient &, const TwoSidedQuotient &) = default;
};

// Smallest-i witness (i, j, q) of w = q s^i v s^j.
inline std::optional<TwoSidedQuotient> two_sided_divides(const SkewMonomial &v, const SkewMonomial &w,
                                                         const MonomialEndomorphism &sigma)
{
    if (v.sdeg > w.sdeg) {
        return std::nullopt;
    }
    const std::uint32_t span = w.sdeg - v.sdeg;
    for (std::uint32_t i = 0; i <= span; ++i) {
        const Monomial image = sigma.apply(v.mono, i);
        if (image.divides(w.mono)) {
            return TwoSidedQuotient{i, span - i, image.quotient_of(w.mono)};
        }
    }
    return std::nullopt;
}

} // namespace skewgb

#endif
