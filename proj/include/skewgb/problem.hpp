#ifndef SKEWGB_PROBLEM_HPP
#define SKEWGB_PROBLEM_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <skewgb/engine.hpp>
#include <skewgb/letterplace.hpp>
#include <skewgb/oracle.hpp>
#include <skewgb/parse.hpp>

// Problem files: "key: value" header lines, a blank line, then one generator
// per line. A generator line ending in '+', '-' or '*' continues on the next
// line. Lines starting with '#' are comments.
//
//   mode: sigma
//   ordering: lex
//   letters: x
//   degree_bound: 6
//
//   x(2)*x(0) - x(1)

namespace skewgb
{

enum class ProblemMode { free, free2, sigma, skew, left };

struct Problem {
    ProblemMode mode = ProblemMode::sigma;
    Field field = Field::rationals();
    Alphabet alphabet;
    MonomialOrder order;
    MonomialEndomorphism endo;
    std::uint32_t degree_bound = 0;
    bool product = true;
    bool chain = true;
    bool interreduce = true;
    bool trace = false;

    std::vector<Polynomial> polys;      // sigma
    std::vector<SkewElement> skews;     // skew, left
    std::vector<FreePolynomial> frees;  // free, free2

    bool is_free() const noexcept
    {
        return mode == ProblemMode::free || mode == ProblemMode::free2;
    }

    GBConfig config() const
    {
        GBConfig cfg;
        switch (mode) {
            case ProblemMode::free:
            case ProblemMode::sigma:
                cfg.mode = Mode::sigma_ideal;
                break;
            case ProblemMode::free2:
            case ProblemMode::skew:
                cfg.mode = Mode::two_sided_skew;
                break;
            case ProblemMode::left:
                cfg.mode = Mode::left_skew;
                break;
        }
        cfg.degree_bound = degree_bound;
        cfg.order = order;
        cfg.endo = endo;
        cfg.product_criterion = product && cfg.mode == Mode::sigma_ideal;
        cfg.chain_criterion = chain;
        cfg.interreduce = interreduce;
        cfg.alphabet = alphabet;
        if (mode == ProblemMode::free) {
            cfg.filter = PairFilter::in_V;
        } else if (mode == ProblemMode::free2) {
            cfg.filter = PairFilter::in_R;
        }
        return cfg;
    }
};

namespace problem_detail
{

inline std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split_list(const std::string &v)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : v + ",") {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!cur.empty()) {
                out.push_back(cur);
            }
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

inline bool yes_no(const std::string &v, std::size_t line)
{
    if (v == "yes" || v == "true" || v == "on") {
        return true;
    }
    if (v == "no" || v == "false" || v == "off") {
        return false;
    }
    throw ParseError("expected yes or no, got '" + v + "'", line, 1);
}

inline std::uint32_t parse_uint(const std::string &v, std::size_t line, const char *what)
{
    if (v.empty() || v.size() > 9 || !std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError(std::string(what) + " must be a nonnegative integer, got '" + v + "'", line, 1);
    }
    return static_cast<std::uint32_t>(std::stoul(v));
}

// "x(0) -> x(1)*x(2)" per line.
inline MonomialEndomorphism parse_table(const std::filesystem::path &path, Field field, const Alphabet &alphabet)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open endomorphism table " + path.string());
    }
    std::map<Variable, Monomial> images;
    std::string raw;
    for (std::size_t line = 1; std::getline(in, raw); ++line) {
        const std::string s = trim(raw);
        if (s.empty() || s.front() == '#') {
            continue;
        }
        const auto arrow = raw.find("->");
        if (arrow == std::string::npos) {
            throw ParseError("expected 'variable -> monomial'", line, 1);
        }
        const auto lhs = parse_polynomial(std::string_view(raw).substr(0, arrow), field, alphabet,
                                          MonomialOrder::lex(), SourcePos{line, 1});
        const auto rhs = parse_polynomial(std::string_view(raw).substr(arrow + 2), field, alphabet,
                                          MonomialOrder::lex(), SourcePos{line, arrow + 3});
        if (lhs.size() != 1 || !lhs.leading_coefficient().is_one() || lhs.leading_monomial().degree() != 1) {
            throw ParseError("left side must be a single variable", line, 1);
        }
        if (rhs.size() != 1 || !rhs.leading_coefficient().is_one()) {
            throw ParseError("right side must be a monomial", line, arrow + 3);
        }
        images[lhs.leading_monomial().factors().front().var] = rhs.leading_monomial();
    }
    return MonomialEndomorphism::table(std::move(images));
}

} // namespace problem_detail

// base_dir resolves "endo: table:<file>".
inline Problem parse_problem(std::string_view text, const std::filesystem::path &base_dir = {})
{
    using namespace problem_detail;
    Problem p;
    std::map<std::string, std::pair<std::string, std::size_t>> keys;
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char c : text) {
            if (c == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        lines.push_back(cur);
    }
    std::size_t at = 0;
    for (; at < lines.size(); ++at) {
        const std::string s = trim(lines[at]);
        if (s.empty()) {
            break;
        }
        if (s.front() == '#') {
            continue;
        }
        const auto colon = s.find(':');
        if (colon == std::string::npos) {
            throw ParseError("expected 'key: value'", at + 1, 1);
        }
        const std::string key = trim(s.substr(0, colon));
        if (keys.contains(key)) {
            throw ParseError("duplicate key '" + key + "'", at + 1, 1);
        }
        keys[key] = {trim(s.substr(colon + 1)), at + 1};
    }

    static const std::vector<std::string> known = {"mode",  "field",    "letters",     "ordering", "endo",
                                                   "degree_bound", "criteria", "interreduce", "trace"};
    for (const auto &[k, v] : keys) {
        if (std::find(known.begin(), known.end(), k) == known.end()) {
            throw ParseError("unknown key '" + k + "'", v.second, 1);
        }
    }
    auto get = [&](const std::string &k) -> const std::pair<std::string, std::size_t> * {
        auto it = keys.find(k);
        return it == keys.end() ? nullptr : &it->second;
    };

    const auto *mode = get("mode");
    if (!mode) {
        throw ConfigError("missing required key 'mode'");
    }
    static const std::map<std::string, ProblemMode> modes = {{"free", ProblemMode::free},
                                                             {"free2", ProblemMode::free2},
                                                             {"sigma", ProblemMode::sigma},
                                                             {"skew", ProblemMode::skew},
                                                             {"left", ProblemMode::left}};
    if (!modes.contains(mode->first)) {
        throw ParseError("mode must be one of free, free2, sigma, skew, left", mode->second, 1);
    }
    p.mode = modes.at(mode->first);

    if (const auto *f = get("field")) {
        if (f->first == "QQ") {
            p.field = Field::rationals();
        } else if (f->first.starts_with("ZZ/")) {
            p.field = Field::prime_field(parse_uint(f->first.substr(3), f->second, "prime"));
        } else {
            throw ParseError("field must be QQ or ZZ/p", f->second, 1);
        }
    }

    if (const auto *l = get("letters")) {
        p.alphabet = Alphabet(split_list(l->first));
        if (p.alphabet.size() == 0) {
            throw ParseError("empty letter list", l->second, 1);
        }
    } else if (p.is_free()) {
        throw ConfigError("free modes need the key 'letters'");
    } else {
        p.alphabet = Alphabet({"x"});
    }

    p.order = p.is_free() ? MonomialOrder::deglex() : MonomialOrder::lex();
    if (const auto *o = get("ordering")) {
        if (o->first == "lex") {
            p.order = MonomialOrder::lex();
        } else if (o->first == "deglex") {
            p.order = MonomialOrder::deglex();
        } else {
            throw ParseError("ordering must be lex or deglex", o->second, 1);
        }
    }

    if (const auto *e = get("endo")) {
        if (e->first == "shift") {
            p.endo = MonomialEndomorphism::shift();
        } else if (e->first.starts_with("power:")) {
            p.endo = MonomialEndomorphism::power(parse_uint(e->first.substr(6), e->second, "power exponent"));
        } else if (e->first.starts_with("table:")) {
            p.endo = parse_table(base_dir / e->first.substr(6), p.field, p.alphabet);
        } else {
            throw ParseError("endo must be shift, power:<e> or table:<file>", e->second, 1);
        }
        if (p.is_free() && p.endo.kind() != MonomialEndomorphism::Kind::shift) {
            throw ConfigError("free modes use the shift endomorphism");
        }
    }

    const auto *d = get("degree_bound");
    if (!d) {
        throw ConfigError("missing required key 'degree_bound'");
    }
    p.degree_bound = parse_uint(d->first, d->second, "degree_bound");
    if (p.degree_bound < 1) {
        throw ParseError("degree_bound must be >= 1", d->second, 1);
    }

    if (const auto *c = get("criteria")) {
        p.product = p.chain = false;
        for (const auto &name : split_list(c->first)) {
            if (name == "product") {
                p.product = true;
            } else if (name == "chain") {
                p.chain = true;
            } else if (name != "none") {
                throw ParseError("unknown criterion '" + name + "'", c->second, 1);
            }
        }
    }
    if (const auto *i = get("interreduce")) {
        p.interreduce = yes_no(i->first, i->second);
    }
    if (const auto *t = get("trace")) {
        p.trace = yes_no(t->first, t->second);
    }

    const GBConfig cfg = p.config();
    for (++at; at < lines.size(); ++at) {
        std::string s = trim(lines[at]);
        if (s.empty() || s.front() == '#') {
            continue;
        }
        const std::size_t first = at;
        std::string text = lines[at];
        while (!s.empty() && (s.back() == '+' || s.back() == '-' || s.back() == '*') && at + 1 < lines.size()) {
            ++at;
            text += "\n" + lines[at];
            s = trim(lines[at]);
        }
        const SourcePos pos{first + 1, 1};
        switch (p.mode) {
            case ProblemMode::free:
            case ProblemMode::free2:
                p.frees.push_back(parse_free(text, p.field, p.alphabet, pos));
                break;
            case ProblemMode::sigma:
                p.polys.push_back(parse_polynomial(text, p.field, p.alphabet, p.order, pos));
                break;
            case ProblemMode::skew:
            case ProblemMode::left:
                p.skews.push_back(parse_skew(text, p.field, p.alphabet, p.order, p.endo, pos));
                break;
        }
    }
    return p;
}

inline Problem load_problem(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str(), path.parent_path());
}

struct RunOptions {
    bool certify = false;
    bool oracle = false;
    bool trace = false;
    bool stats = false;
    unsigned threads = 1;
};

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_refused = 2, exit_check_failed = 3 };

namespace problem_detail
{

inline std::vector<Word> free_lm_words(const std::vector<SkewElement> &basis, const GBConfig &cfg, std::uint32_t letters,
                                       bool skew_side)
{
    return words_in_lm_ideal(window_leading_monomials(basis, cfg), letters, *cfg.degree_bound, skew_side);
}

} // namespace problem_detail

// Runs a parsed problem: basis lines on out, then the optional stats,
// certification and oracle verdicts. Returns the exit code.
inline int run_problem(const Problem &p, const RunOptions &opts, std::ostream &out, std::ostream &err)
{
    GBConfig cfg = p.config();
    cfg.threads = std::max(1u, opts.threads);
    std::vector<std::string> trace_lines;
    if (p.trace || opts.trace) {
        cfg.trace = [&](const std::string &s) { trace_lines.push_back(s); };
    }

    GBResult engine;
    std::vector<std::string> lines;
    try {
        if (p.is_free()) {
            FreeResult r = p.mode == ProblemMode::free ? free_gbasis(p.frees, cfg) : free_gbasis2(p.frees, cfg);
            for (const auto &g : r.basis) {
                lines.push_back(to_string(g, p.alphabet));
            }
            engine = std::move(r.engine);
        } else {
            if (p.mode == ProblemMode::sigma) {
                engine = sigma_gbasis(p.polys, cfg);
            } else if (p.mode == ProblemMode::skew) {
                engine = skew_gbasis(p.skews, cfg);
            } else {
                engine = left_gbasis(p.skews, cfg);
            }
            for (const auto &g : engine.basis) {
                lines.push_back(to_string(g, p.alphabet));
            }
        }
    } catch (const RefusalError &e) {
        err << "refused: " << e.what() << "\n";
        return exit_refused;
    } catch (const ConfigError &e) {
        err << "configuration error: " << e.what() << "\n";
        return exit_usage;
    } catch (const DomainError &e) {
        err << "invalid input: " << e.what() << "\n";
        return exit_usage;
    }

    if (!trace_lines.empty()) {
        out << "[trace]\n";
        for (const auto &l : trace_lines) {
            out << l << "\n";
        }
        out << "[basis]\n";
    }
    for (const auto &l : lines) {
        out << l << "\n";
    }
    for (const auto &w : engine.warnings) {
        err << "warning: " << w << "\n";
    }
    if (opts.stats) {
        out << engine.stats.to_string();
    }
    if (engine.unit_ideal) {
        return exit_refused;
    }

    int code = exit_ok;
    if (opts.certify) {
        const Certificate c = certify(engine.basis, cfg);
        if (c.ok) {
            out << "certification: ok (" << c.pairs_checked << " pairs)\n";
        } else {
            out << "certification: FAILED (" << c.failures << " of " << c.pairs_checked << " pairs)\n";
            for (const auto &s : c.sample) {
                out << "  " << s << "\n";
            }
            code = exit_check_failed;
        }
    }
    if (opts.oracle) {
        GBConfig ocfg = cfg;
        ocfg.trace = nullptr;
        bool match;
        if (p.is_free()) {
            std::vector<SkewElement> gens;
            for (const auto &h : p.frees) {
                if (!h.is_zero()) {
                    gens.push_back(p.mode == ProblemMode::free ? SkewElement(iota_prime(h, cfg.order), 0)
                                                               : iota(h, cfg.order));
                }
            }
            const bool skew_side = p.mode == ProblemMode::free2;
            const GBResult o = oracle_gbasis_truncated(gens, ocfg);
            match = problem_detail::free_lm_words(engine.basis, cfg, p.alphabet.size(), skew_side) ==
                    words_in_lm_ideal(leading_monomials(o.basis, cfg.order), p.alphabet.size(), p.degree_bound,
                                      skew_side);
        } else {
            std::vector<SkewElement> gens = p.skews;
            for (const auto &h : p.polys) {
                gens.emplace_back(h, 0);
            }
            if (p.mode == ProblemMode::sigma) {
                const SigmaOracle o = sigma_oracle(gens, ocfg, p.degree_bound);
                const auto ours = window_leading_monomials(engine.basis, cfg);
                const auto theirs = leading_monomials(o.result.basis, cfg.order);
                match = ours == theirs;
                if (!match && !o.exact) {
                    const bool contained = std::all_of(theirs.begin(), theirs.end(), [&](const SkewMonomial &m) {
                        return lm_ideal_contains(ours, m);
                    });
                    out << (contained ? "oracle lm-ideal contained in the engine's (deglex, input not w-homogeneous)\n"
                                      : "oracle lm-ideals differ\n");
                    return contained ? code : exit_check_failed;
                }
                if (match && o.margin > 0) {
                    out << "oracle lm-ideals match (oracle window " << p.degree_bound + o.margin << ")\n";
                    return code;
                }
            } else {
                match = same_window_lm_ideal(engine.basis, oracle_gbasis_truncated(gens, ocfg), cfg);
            }
        }
        out << (match ? "oracle lm-ideals match\n" : "oracle lm-ideals differ\n");
        if (!match) {
            code = exit_check_failed;
        }
    }
    return code;
}

} // namespace skewgb

#endif
