#ifndef SKEWGB_ENDO_HPP
#define SKEWGB_ENDO_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <skewgb/error.hpp>
#include <skewgb/poly.hpp>

namespace skewgb
{

// A monomial endomorphism sigma of P, given by the images of the variables.
//
//   shift     x_i(j) -> x_i(j+1)
//   power(e)  x_i(j) -> x_i(j)^e, e > 1
//   table     explicit images for finitely many variables; every unlisted
//             variable follows the shift rule.
//
// Compatibility with divisibility (images of distinct variables coprime) is
// decided at construction. A table that fails it is still constructible but
// flagged; the completion engine refuses flagged endomorphisms.
class MonomialEndomorphism
{
public:
    enum class Kind { shift, power, table };

    MonomialEndomorphism() = default;

    static MonomialEndomorphism shift()
    {
        return MonomialEndomorphism{};
    }

    static MonomialEndomorphism power(std::uint32_t e)
    {
        if (e < 2) {
            throw ConfigError("power endomorphism needs an exponent > 1");
        }
        MonomialEndomorphism s;
        s.m_kind = Kind::power;
        s.m_exponent = e;
        return s;
    }

    static MonomialEndomorphism table(std::map<Variable, Monomial> images)
    {
        MonomialEndomorphism s;
        s.m_kind = Kind::table;
        s.m_table = std::move(images);
        s.m_div_compatible = s.table_div_compatible();
        return s;
    }

    Kind kind() const noexcept
    {
        return m_kind;
    }
    std::uint32_t exponent() const noexcept
    {
        return m_exponent;
    }
    const std::map<Variable, Monomial> &table_images() const noexcept
    {
        return m_table;
    }

    bool div_compatible() const noexcept
    {
        return m_div_compatible;
    }

    // Shift and power preserve both built-in orderings.
    bool order_preserving_by_construction() const noexcept
    {
        return m_kind != Kind::table;
    }

    Monomial image(Variable v) const
    {
        switch (m_kind) {
            case Kind::shift:
                return Monomial(Variable{v.letter, v.place + 1});
            case Kind::power:
                return Monomial(v, m_exponent);
            case Kind::table:
                if (auto it = m_table.find(v); it != m_table.end()) {
                    return it->second;
                }
                return Monomial(Variable{v.letter, v.place + 1});
        }
        return {};
    }

    // sigma^k(m).
    Monomial apply(const Monomial &m, std::uint32_t k) const
    {
        if (k == 0 || m.is_one()) {
            return m;
        }
        switch (m_kind) {
            case Kind::shift:
                return m.shifted(k);
            case Kind::power: {
                std::uint64_t scale = 1;
                for (std::uint32_t i = 0; i < k; ++i) {
                    scale *= m_exponent;
                    if (scale > std::numeric_limits<std::uint32_t>::max()) {
                        throw DomainError("exponent overflow applying power endomorphism");
                    }
                }
                std::vector<Monomial::Factor> fs;
                for (const auto &f : m.factors()) {
                    std::uint64_t e = f.exp * scale;
                    if (e > std::numeric_limits<std::uint32_t>::max()) {
                        throw DomainError("exponent overflow applying power endomorphism");
                    }
                    fs.push_back({f.var, static_cast<std::uint32_t>(e)});
                }
                return Monomial(std::move(fs));
            }
            case Kind::table: {
                Monomial cur = m;
                for (std::uint32_t i = 0; i < k; ++i) {
                    Monomial next;
                    for (const auto &f : cur.factors()) {
                        const Monomial img = image(f.var);
                        for (std::uint32_t e = 0; e < f.exp; ++e) {
                            next = next * img;
                        }
                    }
                    cur = std::move(next);
                }
                return cur;
            }
        }
        return m;
    }

    // sigma^k(f). Order-preserving endomorphisms keep the term sequence.
    Polynomial apply(const Polynomial &f, std::uint32_t k) const
    {
        if (k == 0) {
            return f;
        }
        std::vector<Term> terms;
        terms.reserve(f.size());
        for (const auto &t : f.terms()) {
            terms.push_back({t.coeff, apply(t.mono, k)});
        }
        return Polynomial::from_terms(f.order(), std::move(terms));
    }

    std::string describe() const
    {
        switch (m_kind) {
            case Kind::shift:
                return "shift";
            case Kind::power:
                return "power:" + std::to_string(m_exponent);
            case Kind::table:
                return "table(" + std::to_string(m_table.size()) + " images)";
        }
        return "";
    }

private:
    bool table_div_compatible() const
    {
        std::set<Variable> listed_targets;
        for (auto it = m_table.begin(); it != m_table.end(); ++it) {
            if (it->second.is_one()) {
                return false;
            }
            for (auto jt = std::next(it); jt != m_table.end(); ++jt) {
                if (!it->second.coprime(jt->second)) {
                    return false;
                }
            }
            for (const auto &f : it->second.factors()) {
                // x_a(b) is also the image of the unlisted x_a(b-1).
                if (f.var.place >= 1 && !m_table.contains(Variable{f.var.letter, f.var.place - 1})) {
                    return false;
                }
            }
        }
        return true;
    }

    Kind m_kind = Kind::shift;
    std::uint32_t m_exponent = 0;
    std::map<Variable, Monomial> m_table;
    bool m_div_compatible = true;
};

inline Polynomial apply(const MonomialEndomorphism &sigma, std::uint32_t k, const Polynomial &f)
{
    return sigma.apply(f, k);
}

inline bool check_div_compatible(const MonomialEndomorphism &sigma)
{
    return sigma.div_compatible();
}

// Shift and power are compatible with lex and deglex (they preserve the
// variable precedence, resp. scale all exponents uniformly), so true is
// returned without sampling. For tables this is a refuting sampler over
// monomials of degree <= sample_bound: false is a proof of incompatibility,
// true only means no counterexample was found.
inline bool check_order_compatible(const MonomialEndomorphism &sigma, MonomialOrder ord, std::uint32_t sample_bound)
{
    if (sigma.order_preserving_by_construction()) {
        return true;
    }
    std::vector<Variable> vars;
    std::uint32_t max_letter = 0, max_place = 0;
    for (const auto &[v, img] : sigma.table_images()) {
        max_letter = std::max(max_letter, v.letter);
        max_place = std::max(max_place, v.place);
        for (const auto &f : img.factors()) {
            max_letter = std::max(max_letter, f.var.letter);
            max_place = std::max(max_place, f.var.place);
        }
    }
    for (std::uint32_t p = 0; p <= max_place + 1; ++p) {
        for (std::uint32_t l = 0; l <= max_letter; ++l) {
            vars.push_back({l, p});
        }
    }
    std::mt19937_64 rng(0x5eed);
    auto random_monomial = [&] {
        std::uniform_int_distribution<std::uint32_t> deg(1, std::max<std::uint32_t>(1, sample_bound));
        std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
        std::vector<Monomial::Factor> fs;
        for (std::uint32_t d = deg(rng); d > 0; --d) {
            fs.push_back({vars[pick(rng)], 1});
        }
        return Monomial(std::move(fs));
    };
    bool moved = false;
    for (const auto &v : vars) {
        Monomial m(v);
        Monomial img = sigma.apply(m, 1);
        moved = moved || img != m;
        if (ord.compare(img, m) < 0) {
            return false;
        }
    }
    for (int trial = 0; trial < 2000; ++trial) {
        Monomial m = random_monomial(), n = random_monomial();
        Monomial sm = sigma.apply(m, 1), sn = sigma.apply(n, 1);
        moved = moved || sm != m;
        if (ord.compare(sm, m) < 0) {
            return false;
        }
        if (ord.compare(m, n) != ord.compare(sm, sn)) {
            return false;
        }
    }
    return moved;
}

} // namespace skewgb

#endif
