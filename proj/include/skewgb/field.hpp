#ifndef SKEWGB_FIELD_HPP
#define SKEWGB_FIELD_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include <gmpxx.h>

#include <skewgb/error.hpp>

namespace skewgb
{

class FieldElement;

// Coefficient field of a computation: the rationals or a prime field Z/p.
class Field
{
public:
    enum class Kind { rational, prime };

    static Field rationals() noexcept
    {
        return Field{Kind::rational, 0};
    }

    // p must be a prime below 2^31.
    static Field prime_field(std::uint64_t p)
    {
        if (p < 2 || p >= (std::uint64_t(1) << 31) || !is_prime(p)) {
            throw ConfigError("prime field modulus must be a prime below 2^31, got " + std::to_string(p));
        }
        return Field{Kind::prime, p};
    }

    Kind kind() const noexcept
    {
        return m_kind;
    }
    std::uint64_t characteristic() const noexcept
    {
        return m_prime;
    }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_integer(long long n) const;
    FieldElement from_integer(const mpz_class &n) const;
    // Accepts "n" or "n/d" with optional leading sign.
    FieldElement from_string(std::string_view text) const;

    std::string name() const
    {
        return m_kind == Kind::rational ? std::string("QQ") : "ZZ/" + std::to_string(m_prime);
    }

    friend bool operator==(const Field &, const Field &) = default;

private:
    Field(Kind k, std::uint64_t p) noexcept : m_kind(k), m_prime(p) {}

    static bool is_prime(std::uint64_t p) noexcept
    {
        if (p < 4) {
            return p >= 2;
        }
        if (p % 2 == 0) {
            return false;
        }
        for (std::uint64_t d = 3; d * d <= p; d += 2) {
            if (p % d == 0) {
                return false;
            }
        }
        return true;
    }

    Kind m_kind;
    std::uint64_t m_prime;
};

// An exact scalar. Rationals are kept canonical (lowest terms, positive
// denominator) by GMP; residues are kept in [0, p).
class FieldElement
{
    struct Residue {
        std::uint64_t value;
        std::uint64_t prime;
        friend bool operator==(const Residue &, const Residue &) = default;
    };

public:
    FieldElement() = default;
    FieldElement(long long n) : m_value(mpq_class(mpz_class(static_cast<long>(n)))) {}
    explicit FieldElement(mpq_class q) : m_value(std::move(q))
    {
        std::get<mpq_class>(m_value).canonicalize();
    }

    static FieldElement rational(long long num, long long den)
    {
        if (den == 0) {
            throw FieldError("zero denominator");
        }
        return FieldElement(mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))));
    }

    static FieldElement residue(long long value, std::uint64_t prime)
    {
        auto p = static_cast<long long>(prime);
        auto r = value % p;
        if (r < 0) {
            r += p;
        }
        FieldElement out;
        out.m_value = Residue{static_cast<std::uint64_t>(r), prime};
        return out;
    }

    Field field() const
    {
        if (auto *r = std::get_if<Residue>(&m_value)) {
            return Field::prime_field(r->prime);
        }
        return Field::rationals();
    }

    bool is_rational() const noexcept
    {
        return std::holds_alternative<mpq_class>(m_value);
    }

    bool is_zero() const noexcept
    {
        if (auto *q = std::get_if<mpq_class>(&m_value)) {
            return sgn(*q) == 0;
        }
        return std::get<Residue>(m_value).value == 0;
    }

    bool is_one() const noexcept
    {
        if (auto *q = std::get_if<mpq_class>(&m_value)) {
            return *q == 1;
        }
        return std::get<Residue>(m_value).value == 1;
    }

    // Only rationals carry a sign; residues are never negative.
    bool is_negative() const noexcept
    {
        if (auto *q = std::get_if<mpq_class>(&m_value)) {
            return sgn(*q) < 0;
        }
        return false;
    }

    const mpq_class &as_rational() const
    {
        return std::get<mpq_class>(m_value);
    }

    FieldElement operator-() const
    {
        if (auto *q = std::get_if<mpq_class>(&m_value)) {
            return FieldElement(mpq_class(-*q));
        }
        const auto &r = std::get<Residue>(m_value);
        FieldElement out;
        out.m_value = Residue{r.value == 0 ? 0 : r.prime - r.value, r.prime};
        return out;
    }

    FieldElement inverse() const
    {
        if (is_zero()) {
            throw FieldError("division by zero");
        }
        if (auto *q = std::get_if<mpq_class>(&m_value)) {
            return FieldElement(mpq_class(1 / *q));
        }
        const auto &r = std::get<Residue>(m_value);
        FieldElement out;
        out.m_value = Residue{pow_mod(r.value, r.prime - 2, r.prime), r.prime};
        return out;
    }

    FieldElement &operator+=(const FieldElement &o)
    {
        check_compatible(o);
        if (auto *q = std::get_if<mpq_class>(&m_value)) {
            *q += std::get<mpq_class>(o.m_value);
        } else {
            auto &r = std::get<Residue>(m_value);
            r.value = (r.value + std::get<Residue>(o.m_value).value) % r.prime;
        }
        return *this;
    }

    FieldElement &operator-=(const FieldElement &o)
    {
        check_compatible(o);
        if (auto *q = std::get_if<mpq_class>(&m_value)) {
            *q -= std::get<mpq_class>(o.m_value);
        } else {
            auto &r = std::get<Residue>(m_value);
            r.value = (r.value + r.prime - std::get<Residue>(o.m_value).value) % r.prime;
        }
        return *this;
    }

    FieldElement &operator*=(const FieldElement &o)
    {
        check_compatible(o);
        if (auto *q = std::get_if<mpq_class>(&m_value)) {
            *q *= std::get<mpq_class>(o.m_value);
        } else {
            auto &r = std::get<Residue>(m_value);
            r.value = (r.value * std::get<Residue>(o.m_value).value) % r.prime;
        }
        return *this;
    }

    FieldElement &operator/=(const FieldElement &o)
    {
        check_compatible(o);
        return *this *= o.inverse();
    }

    friend FieldElement operator+(FieldElement a, const FieldElement &b)
    {
        return a += b;
    }
    friend FieldElement operator-(FieldElement a, const FieldElement &b)
    {
        return a -= b;
    }
    friend FieldElement operator*(FieldElement a, const FieldElement &b)
    {
        return a *= b;
    }
    friend FieldElement operator/(FieldElement a, const FieldElement &b)
    {
        return a /= b;
    }

    // Elements of different fields never compare equal.
    friend bool operator==(const FieldElement &a, const FieldElement &b)
    {
        return a.m_value == b.m_value;
    }

    std::string to_string() const
    {
        if (auto *q = std::get_if<mpq_class>(&m_value)) {
            return q->get_str();
        }
        return std::to_string(std::get<Residue>(m_value).value);
    }

    friend std::ostream &operator<<(std::ostream &os, const FieldElement &a)
    {
        return os << a.to_string();
    }

private:
    void check_compatible(const FieldElement &o) const
    {
        if (m_value.index() != o.m_value.index()) {
            throw FieldError("mixed-field operands: " + field().name() + " and " + o.field().name());
        }
        if (auto *r = std::get_if<Residue>(&m_value); r && r->prime != std::get<Residue>(o.m_value).prime) {
            throw FieldError("mixed-field operands: " + field().name() + " and " + o.field().name());
        }
    }

    static std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) noexcept
    {
        std::uint64_t acc = 1;
        base %= p;
        while (e != 0) {
            if (e & 1) {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        return acc;
    }

    std::variant<mpq_class, Residue> m_value;
};

inline FieldElement Field::zero() const
{
    return from_integer(0);
}

inline FieldElement Field::one() const
{
    return from_integer(1);
}

inline FieldElement Field::from_integer(long long n) const
{
    if (m_kind == Kind::rational) {
        return FieldElement(n);
    }
    return FieldElement::residue(n, m_prime);
}

inline FieldElement Field::from_integer(const mpz_class &n) const
{
    if (m_kind == Kind::rational) {
        return FieldElement(mpq_class(n));
    }
    mpz_class r = n % mpz_class(static_cast<unsigned long>(m_prime));
    return FieldElement::residue(r.get_si(), m_prime);
}

inline FieldElement Field::from_string(std::string_view text) const
{
    std::string s(text);
    auto slash = s.find('/');
    mpz_class num, den(1);
    try {
        if (slash == std::string::npos) {
            num = mpz_class(s, 10);
        } else {
            num = mpz_class(s.substr(0, slash), 10);
            den = mpz_class(s.substr(slash + 1), 10);
        }
    } catch (const std::invalid_argument &) {
        throw FieldError("malformed number '" + s + "'");
    }
    if (den == 0) {
        throw FieldError("zero denominator in '" + s + "'");
    }
    return from_integer(num) / from_integer(den);
}

} // namespace skewgb

#endif
