#ifndef SKEWGB_ORACLE_HPP
#define SKEWGB_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <tuple>
#include <vector>

#include <skewgb/engine.hpp>
#include <skewgb/error.hpp>

// Reference computation for cross-checking the engine: expand the window
// generators explicitly and run plain Buchberger over the finitely generated
// module, without any criterion and without touching the engine's
// reduction code.

namespace skewgb
{

// Sigma H (weight <= d), s^i H s^j (s-degree <= d) or s^i H (top s-degree
// <= d), as a finite list.
inline std::vector<SkewElement> expand_window(const std::vector<SkewElement> &H, const GBConfig &cfg)
{
    const std::uint32_t d = *cfg.degree_bound;
    std::vector<SkewElement> out;
    for (const auto &h : H) {
        if (h.is_zero()) {
            continue;
        }
        switch (cfg.mode) {
            case Mode::sigma_ideal: {
                const Weight w = h.top().weight();
                const std::uint32_t base = w.is_minus_infinity() ? 0 : w.value();
                for (std::uint32_t i = 0; base + i <= d; ++i) {
                    out.push_back(h.decorated(cfg.endo, i, 0));
                }
                break;
            }
            case Mode::two_sided_skew:
                for (std::uint32_t t = 0; h.max_sdeg() + t <= d; ++t) {
                    for (std::uint32_t i = 0; i <= t; ++i) {
                        out.push_back(h.decorated(cfg.endo, i, t));
                    }
                }
                break;
            case Mode::left_skew:
                for (std::uint32_t i = 0; h.max_sdeg() + i <= d; ++i) {
                    out.push_back(h.decorated(cfg.endo, i, i));
                }
                break;
        }
    }
    return out;
}

namespace oracle_detail
{

// Top-reduction by P-divisibility at equal s-degree, first divisor wins.
inline SkewElement top_reduce(SkewElement h, const std::vector<SkewElement> &B)
{
    while (!h.is_zero()) {
        const SkewMonomial m = lm_skew(h);
        const SkewElement *hit = nullptr;
        for (const auto &b : B) {
            const SkewMonomial n = lm_skew(b);
            if (n.sdeg == m.sdeg && n.mono.divides(m.mono)) {
                hit = &b;
                break;
            }
        }
        if (!hit) {
            return h;
        }
        const FieldElement c = lc_skew(h) / lc_skew(*hit);
        h.sub_mul(c, lm_skew(*hit).mono.quotient_of(m.mono), *hit);
    }
    return h;
}

} // namespace oracle_detail

// With a letterplace filter the inputs are homogeneous, so pairs above
// total degree d are skipped: they cannot affect the degree <= d part.
//
// margin > 0 (sigma mode, lex only) expands the generators up to weight
// d + margin and keeps the basis elements of weight <= d. Lex with the highest
// place first eliminates the places above d, so the kept part is a basis of
// (ideal of the wider window) restricted to P^(d). The plain window ideal can
// be strictly smaller than the sigma-ideal cut down to P^(d) when the input
// is not w-homogeneous.
inline GBResult oracle_gbasis_truncated(const std::vector<SkewElement> &H, const GBConfig &cfg,
                                        std::uint32_t margin = 0)
{
    detail::validate(cfg);
    if (margin > 0 && (cfg.mode != Mode::sigma_ideal || cfg.order.kind() != MonomialOrder::Kind::lex)) {
        throw ConfigError("an oracle margin needs sigma mode with lex");
    }
    if (margin > 0) {
        GBConfig wide = cfg;
        wide.degree_bound = *cfg.degree_bound + margin;
        GBResult r = oracle_gbasis_truncated(H, wide);
        std::erase_if(r.basis, [&](const SkewElement &g) {
            const Weight w = g.top().weight();
            return !w.is_minus_infinity() && w.value() > *cfg.degree_bound;
        });
        r.degree_bound = *cfg.degree_bound;
        return r;
    }
    const std::uint32_t d = *cfg.degree_bound;
    const bool degree_cap = cfg.filter != PairFilter::none;
    GBResult result;
    result.mode = cfg.mode;
    result.degree_bound = d;

    std::vector<SkewElement> B;
    // (lcm degree, s-degree, second index, first index)
    std::set<std::tuple<std::uint32_t, std::uint32_t, std::size_t, std::size_t>> pairs;
    auto add = [&](SkewElement g) {
        g = g.monic();
        const SkewMonomial m = lm_skew(g);
        for (std::size_t k = 0; k < B.size(); ++k) {
            const SkewMonomial n = lm_skew(B[k]);
            if (n.sdeg != m.sdeg) {
                continue;
            }
            const std::uint32_t deg = lcm(m.mono, n.mono).degree();
            if (degree_cap && deg > d) {
                continue;
            }
            ++result.stats.considered;
            pairs.emplace(deg, m.sdeg, B.size(), k);
        }
        B.push_back(std::move(g));
        ++result.stats.added;
    };

    for (auto &g : expand_window(H, cfg)) {
        SkewElement r = oracle_detail::top_reduce(std::move(g), B);
        if (!r.is_zero()) {
            add(std::move(r));
        }
    }
    while (!pairs.empty()) {
        const auto [deg, sdeg, a, b] = *pairs.begin();
        pairs.erase(pairs.begin());
        const SkewMonomial ma = lm_skew(B[a]), mb = lm_skew(B[b]);
        const Monomial l = lcm(ma.mono, mb.mono);
        SkewElement h(cfg.order);
        h.sub_mul(-lc_skew(B[a]), ma.mono.quotient_of(l), B[a]);
        h.sub_mul(lc_skew(B[b]), mb.mono.quotient_of(l), B[b]);
        h = oracle_detail::top_reduce(std::move(h), B);
        ++result.stats.reduced;
        if (h.is_zero()) {
            ++result.stats.reduced_to_zero;
        } else {
            add(std::move(h));
        }
    }
    result.basis = std::move(B);
    return result;
}

// Minimal generators of the monomial submodule spanned by ms, sorted.
inline std::vector<SkewMonomial> minimal_generators(std::vector<SkewMonomial> ms, MonomialOrder ord)
{
    std::sort(ms.begin(), ms.end(), [&](const SkewMonomial &a, const SkewMonomial &b) {
        if (a.mono.degree() != b.mono.degree()) {
            return a.mono.degree() < b.mono.degree();
        }
        return compare(a, b, ord) < 0;
    });
    std::vector<SkewMonomial> kept;
    for (auto &m : ms) {
        const bool covered = std::any_of(kept.begin(), kept.end(), [&](const SkewMonomial &k) {
            return k.sdeg == m.sdeg && k.mono.divides(m.mono);
        });
        if (!covered) {
            kept.push_back(std::move(m));
        }
    }
    std::sort(kept.begin(), kept.end(), [&](const SkewMonomial &a, const SkewMonomial &b) { return compare(a, b, ord) < 0; });
    return kept;
}

// Leading monomials of all decorated basis elements inside the window.
inline std::vector<SkewMonomial> window_leading_monomials(const std::vector<SkewElement> &G, const GBConfig &cfg)
{
    std::vector<SkewMonomial> out;
    for (const auto &g : expand_window(G, cfg)) {
        out.push_back(lm_skew(g));
    }
    return minimal_generators(std::move(out), cfg.order);
}

inline std::vector<SkewMonomial> leading_monomials(const std::vector<SkewElement> &G, MonomialOrder ord)
{
    std::vector<SkewMonomial> out;
    for (const auto &g : G) {
        if (!g.is_zero()) {
            out.push_back(lm_skew(g));
        }
    }
    return minimal_generators(std::move(out), ord);
}

inline bool lm_ideal_contains(const std::vector<SkewMonomial> &gens, const SkewMonomial &m)
{
    return std::any_of(gens.begin(), gens.end(),
                       [&](const SkewMonomial &g) { return g.sdeg == m.sdeg && g.mono.divides(m.mono); });
}

struct SigmaOracle {
    GBResult result;
    std::uint32_t margin = 0;
    // False when the comparison can only be one-sided (deglex, input not
    // w-homogeneous): the oracle's lm-ideal is then contained in the engine's.
    bool exact = true;
};

// Sigma-mode oracle with the margin chosen from the input. w-homogeneous
// input needs none: substituting 0 for the places above d kills every
// generator outside the window and fixes everything inside it. Otherwise,
// under lex, the margin grows until the restricted lm-set stops changing
// (at most max_margin).
inline SigmaOracle sigma_oracle(const std::vector<SkewElement> &H, const GBConfig &cfg, std::uint32_t max_margin)
{
    SigmaOracle o;
    o.result = oracle_gbasis_truncated(H, cfg);
    const bool homogeneous =
        std::all_of(H.begin(), H.end(), [](const SkewElement &h) { return h.is_zero() || h.top().is_w_homogeneous(); });
    if (homogeneous) {
        return o;
    }
    if (cfg.order.kind() != MonomialOrder::Kind::lex) {
        o.exact = false;
        return o;
    }
    auto lms = leading_monomials(o.result.basis, cfg.order);
    for (std::uint32_t m = 1; m <= max_margin; ++m) {
        GBResult wider = oracle_gbasis_truncated(H, cfg, m);
        auto next = leading_monomials(wider.basis, cfg.order);
        o.result = std::move(wider);
        o.margin = m;
        if (next == lms) {
            break;
        }
        lms = std::move(next);
    }
    return o;
}

// Window lm-ideal of an engine basis against the oracle's.
inline bool same_window_lm_ideal(const std::vector<SkewElement> &G, const GBResult &oracle, const GBConfig &cfg)
{
    return window_leading_monomials(G, cfg) == leading_monomials(oracle.basis, cfg.order);
}

} // namespace skewgb

#endif
