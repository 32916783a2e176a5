#ifndef SKEWGB_PARSE_HPP
#define SKEWGB_PARSE_HPP

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <skewgb/error.hpp>
#include <skewgb/field.hpp>
#include <skewgb/format.hpp>
#include <skewgb/letterplace.hpp>
#include <skewgb/skew.hpp>

// Expressions over the grammar
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' integer]
//   atom   := integer ['/' integer] | name ['(' integer ')'] | 's' | '(' expr ')'
//
// Whitespace is ignored. A name is a letter of the alphabet; the place in
// parentheses is required for P and S and forbidden for the free algebra.

namespace skewgb
{

struct SourcePos {
    std::size_t line = 1;
    std::size_t column = 1;
};

namespace parse_detail
{

enum class Tok { number, name, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    SourcePos pos;
};

inline std::vector<Token> tokenize(std::string_view src, SourcePos start)
{
    std::vector<Token> out;
    SourcePos pos = start;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (src[i] == '\n') {
                ++pos.line;
                pos.column = 1;
            } else {
                ++pos.column;
            }
            ++i;
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const SourcePos here = pos;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                ++j;
            }
            out.push_back({Tok::number, std::string(src.substr(i, j - i)), here});
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
                ++j;
            }
            out.push_back({Tok::name, std::string(src.substr(i, j - i)), here});
            advance(j - i);
            continue;
        }
        Tok k;
        switch (c) {
            case '+':
                k = Tok::plus;
                break;
            case '-':
                k = Tok::minus;
                break;
            case '*':
                k = Tok::star;
                break;
            case '^':
                k = Tok::caret;
                break;
            case '/':
                k = Tok::slash;
                break;
            case '(':
                k = Tok::lparen;
                break;
            case ')':
                k = Tok::rparen;
                break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", here.line, here.column);
        }
        out.push_back({k, std::string(1, c), here});
        advance(1);
    }
    out.push_back({Tok::end, "", pos});
    return out;
}

template <class Builder>
class Parser
{
public:
    using Value = typename Builder::Value;

    Parser(const Builder &b, std::vector<Token> toks) : m_b(b), m_toks(std::move(toks)) {}

    Value parse()
    {
        Value v = expr();
        if (peek().kind != Tok::end) {
            fail("unexpected '" + peek().text + "'");
        }
        return v;
    }

private:
    const Token &peek() const
    {
        return m_toks[m_at];
    }
    const Token &take()
    {
        return m_toks[m_at++];
    }
    bool accept(Tok k)
    {
        if (peek().kind == k) {
            ++m_at;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string &msg) const
    {
        throw ParseError(msg, peek().pos.line, peek().pos.column);
    }
    const Token &expect(Tok k, const char *what)
    {
        if (peek().kind != k) {
            fail(std::string("expected ") + what + (peek().kind == Tok::end ? " at end of input" : ", got '" + peek().text + "'"));
        }
        return take();
    }

    std::uint32_t integer(const char *what)
    {
        const Token &t = expect(Tok::number, what);
        if (t.text.size() > 9) {
            throw ParseError(std::string(what) + " too large", t.pos.line, t.pos.column);
        }
        return static_cast<std::uint32_t>(std::stoul(t.text));
    }

    Value expr()
    {
        Value v;
        if (accept(Tok::minus)) {
            v = m_b.neg(term());
        } else {
            accept(Tok::plus);
            v = term();
        }
        for (;;) {
            if (accept(Tok::plus)) {
                v = m_b.add(v, term());
            } else if (accept(Tok::minus)) {
                v = m_b.sub(v, term());
            } else {
                return v;
            }
        }
    }

    Value term()
    {
        Value v = factor();
        while (accept(Tok::star)) {
            v = m_b.mul(v, factor());
        }
        return v;
    }

    Value factor()
    {
        Value v = atom();
        if (accept(Tok::caret)) {
            const std::uint32_t e = integer("exponent");
            Value acc = m_b.one();
            for (std::uint32_t k = 0; k < e; ++k) {
                acc = m_b.mul(acc, v);
            }
            v = acc;
        }
        return v;
    }

    Value atom()
    {
        const Token &t = peek();
        switch (t.kind) {
            case Tok::number: {
                std::string text = take().text;
                if (accept(Tok::slash)) {
                    text += "/" + expect(Tok::number, "denominator").text;
                }
                try {
                    return m_b.scalar(text);
                } catch (const FieldError &e) {
                    throw ParseError(e.what(), t.pos.line, t.pos.column);
                }
            }
            case Tok::name: {
                const std::string name = take().text;
                std::optional<std::uint32_t> place;
                if (accept(Tok::lparen)) {
                    place = integer("place index");
                    expect(Tok::rparen, "')'");
                }
                return m_b.name(name, place, t.pos);
            }
            case Tok::lparen: {
                take();
                Value v = expr();
                expect(Tok::rparen, "')'");
                return v;
            }
            case Tok::end:
                fail("unexpected end of input");
            default:
                fail("unexpected '" + t.text + "'");
        }
    }

    const Builder &m_b;
    std::vector<Token> m_toks;
    std::size_t m_at = 0;
};

struct PolyBuilder {
    using Value = Polynomial;
    Field field;
    const Alphabet &alphabet;
    MonomialOrder order;

    Value one() const
    {
        return Polynomial::constant(order, field.one());
    }
    Value scalar(const std::string &text) const
    {
        return Polynomial::constant(order, field.from_string(text));
    }
    Value name(const std::string &n, std::optional<std::uint32_t> place, SourcePos pos) const
    {
        auto letter = alphabet.index_of(n);
        if (!letter) {
            throw ParseError(n == "s" ? "s is not allowed here" : "unknown letter '" + n + "'", pos.line, pos.column);
        }
        if (!place) {
            throw ParseError("letter '" + n + "' needs a place, as in " + n + "(0)", pos.line, pos.column);
        }
        return Polynomial::monomial(order, field.one(), Monomial(Variable{*letter, *place}));
    }
    Value neg(const Value &a) const
    {
        return -a;
    }
    Value add(const Value &a, const Value &b) const
    {
        return a + b;
    }
    Value sub(const Value &a, const Value &b) const
    {
        return a - b;
    }
    Value mul(const Value &a, const Value &b) const
    {
        return a * b;
    }
};

struct SkewBuilder {
    using Value = SkewElement;
    Field field;
    const Alphabet &alphabet;
    MonomialOrder order;
    const MonomialEndomorphism &endo;

    Value one() const
    {
        return SkewElement(Polynomial::constant(order, field.one()), 0);
    }
    Value scalar(const std::string &text) const
    {
        return SkewElement(Polynomial::constant(order, field.from_string(text)), 0);
    }
    Value name(const std::string &n, std::optional<std::uint32_t> place, SourcePos pos) const
    {
        if (!alphabet.index_of(n) && n == "s") {
            if (place) {
                throw ParseError("s takes no place index", pos.line, pos.column);
            }
            return SkewElement(Polynomial::constant(order, field.one()), 1);
        }
        return SkewElement(PolyBuilder{field, alphabet, order}.name(n, place, pos), 0);
    }
    Value neg(const Value &a) const
    {
        return -a;
    }
    Value add(const Value &a, const Value &b) const
    {
        return a + b;
    }
    Value sub(const Value &a, const Value &b) const
    {
        return a - b;
    }
    Value mul(const Value &a, const Value &b) const
    {
        return skew_mul(a, b, endo);
    }
};

struct FreeBuilder {
    using Value = FreePolynomial;
    Field field;
    const Alphabet &alphabet;

    Value one() const
    {
        return FreePolynomial::word(field.one(), Word{});
    }
    Value scalar(const std::string &text) const
    {
        return FreePolynomial::word(field.from_string(text), Word{});
    }
    Value name(const std::string &n, std::optional<std::uint32_t> place, SourcePos pos) const
    {
        auto letter = alphabet.index_of(n);
        if (!letter) {
            throw ParseError("unknown letter '" + n + "'", pos.line, pos.column);
        }
        if (place) {
            throw ParseError("free algebra letters take no place index", pos.line, pos.column);
        }
        return FreePolynomial::word(field.one(), Word{{*letter}});
    }
    Value neg(const Value &a) const
    {
        return -a;
    }
    Value add(const Value &a, const Value &b) const
    {
        return a + b;
    }
    Value sub(const Value &a, const Value &b) const
    {
        return a - b;
    }
    Value mul(const Value &a, const Value &b) const
    {
        return a * b;
    }
};

template <class Builder>
typename Builder::Value run(const Builder &b, std::string_view text, SourcePos start)
{
    return Parser<Builder>(b, tokenize(text, start)).parse();
}

} // namespace parse_detail

inline Polynomial parse_polynomial(std::string_view text, Field field, const Alphabet &alphabet, MonomialOrder ord,
                                   SourcePos start = {})
{
    return parse_detail::run(parse_detail::PolyBuilder{field, alphabet, ord}, text, start);
}

inline SkewElement parse_skew(std::string_view text, Field field, const Alphabet &alphabet, MonomialOrder ord,
                              const MonomialEndomorphism &endo, SourcePos start = {})
{
    return parse_detail::run(parse_detail::SkewBuilder{field, alphabet, ord, endo}, text, start);
}

inline FreePolynomial parse_free(std::string_view text, Field field, const Alphabet &alphabet, SourcePos start = {})
{
    return parse_detail::run(parse_detail::FreeBuilder{field, alphabet}, text, start);
}

} // namespace skewgb

#endif
