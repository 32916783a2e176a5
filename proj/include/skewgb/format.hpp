#ifndef SKEWGB_FORMAT_HPP
#define SKEWGB_FORMAT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <skewgb/poly.hpp>
#include <skewgb/skew.hpp>

namespace skewgb
{

// Names of the letters x_0, x_1, ... of the alphabet X.
class Alphabet
{
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names) : m_names(std::move(names)) {}

    // x1, ..., xn.
    static Alphabet indexed(std::uint32_t n)
    {
        std::vector<std::string> names;
        for (std::uint32_t i = 1; i <= n; ++i) {
            names.push_back("x" + std::to_string(i));
        }
        return Alphabet(std::move(names));
    }

    std::uint32_t size() const noexcept
    {
        return static_cast<std::uint32_t>(m_names.size());
    }

    std::string name(std::uint32_t letter) const
    {
        return letter < m_names.size() ? m_names[letter] : "x" + std::to_string(letter + 1);
    }

    std::optional<std::uint32_t> index_of(std::string_view name) const
    {
        for (std::uint32_t i = 0; i < m_names.size(); ++i) {
            if (m_names[i] == name) {
                return i;
            }
        }
        return std::nullopt;
    }

    const std::vector<std::string> &names() const noexcept
    {
        return m_names;
    }

private:
    std::vector<std::string> m_names;
};

inline std::string to_string(Variable v, const Alphabet &a)
{
    return a.name(v.letter) + "(" + std::to_string(v.place) + ")";
}

// Largest variable first: x1(2)*x1(0), x2(3)^2.
inline std::string to_string(const Monomial &m, const Alphabet &a)
{
    if (m.is_one()) {
        return "1";
    }
    std::string out;
    const auto &fs = m.factors();
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
        if (!out.empty()) {
            out += '*';
        }
        out += to_string(it->var, a);
        if (it->exp != 1) {
            out += '^' + std::to_string(it->exp);
        }
    }
    return out;
}

namespace detail
{

// Appends "c*m" with its sign separator. body is the rendered monomial, or
// empty for the unit monomial.
inline void append_term(std::string &out, const FieldElement &c, const std::string &body)
{
    const bool negative = c.is_negative();
    if (out.empty()) {
        if (negative) {
            out += '-';
        }
    } else {
        out += negative ? " - " : " + ";
    }
    const std::string magnitude = negative ? (-c).to_string() : c.to_string();
    if (body.empty()) {
        out += magnitude;
    } else if (magnitude == "1") {
        out += body;
    } else {
        out += magnitude + "*" + body;
    }
}

} // namespace detail

inline std::string to_string(const Polynomial &f, const Alphabet &a)
{
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto &t : f.terms()) {
        detail::append_term(out, t.coeff, t.mono.is_one() ? std::string() : to_string(t.mono, a));
    }
    return out;
}

inline std::string to_string(const SkewMonomial &m, const Alphabet &a)
{
    std::string out = to_string(m.mono, a);
    if (m.sdeg == 0) {
        return out;
    }
    std::string s = m.sdeg == 1 ? std::string("s") : "s^" + std::to_string(m.sdeg);
    return m.mono.is_one() ? s : out + "*" + s;
}

// (x1(2)*x1(0) - x1(1))*s^2, components by descending s-degree.
inline std::string to_string(const SkewElement &f, const Alphabet &a)
{
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    const auto &cs = f.components();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        const auto &[d, p] = *it;
        if (!out.empty()) {
            out += " + ";
        }
        // A lone term with a positive coefficient needs no parentheses.
        const bool bare = p.size() == 1 && !p.leading_coefficient().is_negative();
        const std::string body = bare ? to_string(p, a) : "(" + to_string(p, a) + ")";
        if (d == 0) {
            out += cs.size() > 1 ? body : to_string(p, a);
            continue;
        }
        std::string s = d == 1 ? std::string("s") : "s^" + std::to_string(d);
        if (p.is_constant() && p.leading_coefficient().is_one()) {
            out += s;
        } else {
            out += body + "*" + s;
        }
    }
    return out;
}

} // namespace skewgb

#endif
