#ifndef SKEWGB_ENGINE_HPP
#define SKEWGB_ENGINE_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <skewgb/endo.hpp>
#include <skewgb/error.hpp>
#include <skewgb/format.hpp>
#include <skewgb/poly.hpp>
#include <skewgb/skew.hpp>

namespace skewgb
{

// two_sided_skew: graded two-sided ideals of S, pairs (f, s^i g s^j).
// left_skew:      left ideals of S, pairs (f, s^i g).
// sigma_ideal:    sigma-invariant ideals of P (elements at s-degree 0),
//                 pairs (f, sigma^i g), window on the weight.
enum class Mode { two_sided_skew, left_skew, sigma_ideal };

// Keep only S-polynomials in V (letterplace, sigma_ideal mode) or in R
// (letterplace, two_sided_skew mode).
enum class PairFilter { none, in_V, in_R };

inline std::string to_string(Mode m)
{
    switch (m) {
        case Mode::two_sided_skew:
            return "skew";
        case Mode::left_skew:
            return "left";
        case Mode::sigma_ideal:
            return "sigma";
    }
    return "";
}

struct GBConfig {
    Mode mode = Mode::sigma_ideal;
    std::optional<std::uint32_t> degree_bound; // mandatory
    MonomialOrder order;
    MonomialEndomorphism endo;
    bool product_criterion = false;
    bool chain_criterion = true;
    PairFilter filter = PairFilter::none;
    bool interreduce = true;
    unsigned threads = 1;
    // One line per pair when set.
    std::function<void(const std::string &)> trace;
    // Only used to render trace lines.
    Alphabet alphabet;

    static GBConfig make(Mode mode, std::uint32_t d, MonomialOrder ord = MonomialOrder::lex(),
                         MonomialEndomorphism endo = MonomialEndomorphism::shift())
    {
        GBConfig cfg;
        cfg.mode = mode;
        cfg.degree_bound = d;
        cfg.order = ord;
        cfg.endo = std::move(endo);
        cfg.product_criterion = mode == Mode::sigma_ideal;
        return cfg;
    }
};

struct PairStats {
    std::size_t considered = 0;
    std::size_t product_killed = 0;
    std::size_t chain_killed = 0;
    std::size_t filtered = 0;
    std::size_t reduced = 0;
    std::size_t reduced_to_zero = 0;
    std::size_t added = 0;
    std::size_t inputs_outside_window = 0;

    std::string to_string() const
    {
        std::string out = "[stats]\n";
        auto line = [&](const char *k, std::size_t v) { out += std::string(k) + ": " + std::to_string(v) + "\n"; };
        line("pairs_considered", considered);
        line("product_criterion", product_killed);
        line("chain_criterion", chain_killed);
        line("filtered", filtered);
        line("reduced", reduced);
        line("reduced_to_zero", reduced_to_zero);
        line("added", added);
        line("inputs_outside_window", inputs_outside_window);
        return out;
    }
};

struct GBResult {
    Mode mode = Mode::sigma_ideal;
    std::vector<SkewElement> basis;
    std::uint32_t degree_bound = 0;
    PairStats stats;
    bool unit_ideal = false;
    std::vector<std::string> warnings;

    // The basis under s -> 1.
    std::vector<Polynomial> polynomials() const
    {
        std::vector<Polynomial> out;
        for (const auto &g : basis) {
            Polynomial p(g.order());
            for (const auto &[d, f] : g.components()) {
                p += f;
            }
            out.push_back(std::move(p));
        }
        return out;
    }
};

// One step of a reduction: h -= coeff * quotient * sigma^shift(g_index) s^offset.
struct ReductionStep {
    std::size_t index;
    std::uint32_t shift;
    std::uint32_t offset;
    Monomial quotient;
    FieldElement coeff;
};
using ReductionLog = std::vector<ReductionStep>;

struct Certificate {
    bool ok = true;
    std::size_t pairs_checked = 0;
    std::size_t failures = 0;
    std::vector<std::string> sample; // first few failing pairs
};

namespace detail
{

inline void validate(const GBConfig &cfg)
{
    if (!cfg.degree_bound) {
        throw ConfigError("degree_bound is mandatory");
    }
    if (cfg.product_criterion && cfg.mode != Mode::sigma_ideal) {
        throw ConfigError("the product criterion is only sound in sigma_ideal mode");
    }
    if (cfg.mode == Mode::sigma_ideal && cfg.endo.kind() != MonomialEndomorphism::Kind::shift) {
        throw ConfigError("sigma_ideal mode truncates on the weight and needs the shift endomorphism");
    }
    if (cfg.filter != PairFilter::none && cfg.endo.kind() != MonomialEndomorphism::Kind::shift) {
        throw ConfigError("letterplace filters need the shift endomorphism");
    }
    if (cfg.filter == PairFilter::in_V && cfg.mode != Mode::sigma_ideal) {
        throw ConfigError("the V filter belongs to sigma_ideal mode");
    }
    if (cfg.filter == PairFilter::in_R && cfg.mode != Mode::two_sided_skew) {
        throw ConfigError("the R filter belongs to two_sided_skew mode");
    }
    if (!check_div_compatible(cfg.endo)) {
        throw RefusalError("endomorphism " + cfg.endo.describe() +
                           " is not compatible with divisibility (variable images not coprime)");
    }
    if (!check_order_compatible(cfg.endo, cfg.order, 3)) {
        throw RefusalError("endomorphism " + cfg.endo.describe() + " is not compatible with " + cfg.order.name() +
                           " (or acts trivially on the sampled range)");
    }
}

inline void check_element(const SkewElement &g, const GBConfig &cfg)
{
    if (g.is_zero()) {
        return;
    }
    if (g.order() != cfg.order) {
        throw ConfigError("element ordered by " + g.order().name() + ", configuration uses " + cfg.order.name());
    }
    if (cfg.mode == Mode::sigma_ideal && g.max_sdeg() != 0) {
        throw DomainError("sigma_ideal mode works on elements of P (s-degree 0)");
    }
    if (cfg.mode == Mode::two_sided_skew && !g.is_homogeneous()) {
        throw DomainError("two_sided_skew mode needs s-homogeneous elements");
    }
}

// m with every place lowered by k. Precondition: all places >= k.
inline Monomial unshifted(const Monomial &m, std::uint32_t k)
{
    std::vector<Monomial::Factor> fs = m.factors();
    for (auto &f : fs) {
        f.var.place -= k;
    }
    return Monomial(std::move(fs));
}

// shift^i(m) | n, without building shift^i(m).
inline bool shifted_divides(const Monomial &m, std::uint32_t i, const Monomial &n) noexcept
{
    const auto &a = m.factors();
    const auto &b = n.factors();
    if (a.size() > b.size()) {
        return false;
    }
    auto j = b.begin();
    for (const auto &f : a) {
        const Variable v{f.var.letter, f.var.place + i};
        while (j != b.end() && j->var < v) {
            ++j;
        }
        if (j == b.end() || j->var != v || j->exp < f.exp) {
            return false;
        }
        ++j;
    }
    return true;
}

inline bool passes_filter(PairFilter filter, const Monomial &lcm, std::uint32_t sdeg)
{
    switch (filter) {
        case PairFilter::none:
            return true;
        case PairFilter::in_V:
            return lcm.multidegree().is_ones(lcm.degree());
        case PairFilter::in_R:
            return lcm.multidegree().is_ones(sdeg);
    }
    return true;
}

// sigma^left(g) s^offset; left = offset in left mode, offset = 0 in sigma mode.
struct Decoration {
    std::uint32_t left = 0;
    std::uint32_t offset = 0;
    friend bool operator==(const Decoration &, const Decoration &) = default;
};

// The basis together with its window of decorated copies. Images
// sigma^i(g) are built on first use and cached; the cache is the only state
// touched concurrently.
class ReducerSet
{
public:
    explicit ReducerSet(const GBConfig &cfg) : m_cfg(cfg), m_d(*cfg.degree_bound) {}
    ReducerSet(const ReducerSet &) = delete;
    ReducerSet &operator=(const ReducerSet &) = delete;

    std::size_t size() const noexcept
    {
        return m_entries.size();
    }
    const SkewElement &element(std::size_t k) const
    {
        return m_entries[k]->value;
    }
    const GBConfig &config() const noexcept
    {
        return m_cfg;
    }

    // Stores monic(g). Precondition: g nonzero.
    std::size_t add(const SkewElement &g)
    {
        auto e = std::make_unique<Entry>();
        e->value = g.monic();
        e->sdeg = g.max_sdeg();
        e->weight = m_cfg.mode == Mode::sigma_ideal ? e->value.top().weight() : Weight(e->sdeg);
        const Monomial &lm = e->value.top().leading_monomial();
        if (auto top = max_shift_of(*e)) {
            for (std::uint32_t i = 0; i <= *top; ++i) {
                e->lm_images.push_back(m_cfg.endo.apply(lm, i));
            }
            e->images.resize(*top + 1);
        }
        if (!lm.is_one()) {
            e->min_place = lm.factors().front().var.place;
            e->max_place = lm.factors().back().var.place;
        }
        m_entries.push_back(std::move(e));
        return m_entries.size() - 1;
    }

    std::uint32_t sdeg(std::size_t k) const
    {
        return m_entries[k]->sdeg;
    }
    Weight weight(std::size_t k) const
    {
        return m_entries[k]->weight;
    }

    // Largest i such that some decoration sigma^i(g_k) lies in the window.
    std::optional<std::uint32_t> max_shift(std::size_t k) const
    {
        const auto &e = *m_entries[k];
        if (e.lm_images.empty()) {
            return std::nullopt;
        }
        return static_cast<std::uint32_t>(e.lm_images.size() - 1);
    }

    const Monomial &lm_image(std::size_t k, std::uint32_t i) const
    {
        return m_entries[k]->lm_images.at(i);
    }

    const SkewElement &image(std::size_t k, std::uint32_t i) const
    {
        const auto &e = *m_entries[k];
        if (i == 0) {
            return e.value;
        }
        std::lock_guard lock(m_mutex);
        auto &slot = e.images.at(i);
        if (!slot) {
            slot = std::make_unique<SkewElement>(e.value.decorated(m_cfg.endo, i, 0));
        }
        return *slot;
    }

    // Admissible shifts of g_k whose leading monomial sits at s-degree c, as
    // the closed range [lo, hi]; empty when lo > hi.
    std::pair<std::int64_t, std::int64_t> shift_range(std::size_t k, std::uint32_t c) const
    {
        const auto &e = *m_entries[k];
        auto top = max_shift(k);
        if (!top) {
            return {1, 0};
        }
        switch (m_cfg.mode) {
            case Mode::sigma_ideal:
                return c == 0 ? std::pair<std::int64_t, std::int64_t>{0, *top} : std::pair<std::int64_t, std::int64_t>{1, 0};
            case Mode::two_sided_skew:
                if (c < e.sdeg || c > m_d) {
                    return {1, 0};
                }
                return {0, c - e.sdeg};
            case Mode::left_skew:
                if (c < e.sdeg || c > m_d) {
                    return {1, 0};
                }
                return {c - e.sdeg, c - e.sdeg};
        }
        return {1, 0};
    }

    Decoration decoration(std::size_t k, std::uint32_t i, std::uint32_t c) const
    {
        return m_cfg.mode == Mode::sigma_ideal ? Decoration{i, 0} : Decoration{i, c - m_entries[k]->sdeg};
    }

    // Calls f(i, lm image) for every admissible shift of g_k at s-degree c.
    template <class F>
    void for_each_shift(std::size_t k, std::uint32_t c, F &&f) const
    {
        auto [lo, hi] = shift_range(k, c);
        for (std::int64_t i = lo; i <= hi; ++i) {
            f(static_cast<std::uint32_t>(i), lm_image(k, static_cast<std::uint32_t>(i)));
        }
    }

    // The decorated element with the smallest leading monomial dividing n at
    // s-degree c; ties go to the smaller index.
    std::optional<std::pair<std::size_t, Decoration>> find_reducer(const Monomial &n, std::uint32_t c) const
    {
        std::optional<std::pair<std::size_t, std::uint32_t>> best;
        const bool shift = m_cfg.endo.kind() == MonomialEndomorphism::Kind::shift;
        std::int64_t nmin = 0, nmax = -1;
        if (!n.is_one()) {
            nmin = n.factors().front().var.place;
            nmax = n.factors().back().var.place;
        }
        for (std::size_t k = 0; k < m_entries.size(); ++k) {
            const auto &e = *m_entries[k];
            auto [lo, hi] = shift_range(k, c);
            if (lo > hi) {
                continue;
            }
            const Monomial &m0 = e.lm_images[0];
            if (m0.is_one()) {
                consider(best, k, static_cast<std::uint32_t>(lo));
                continue;
            }
            if (n.is_one()) {
                continue;
            }
            if (shift) {
                lo = std::max<std::int64_t>(lo, nmin - e.min_place);
                hi = std::min<std::int64_t>(hi, nmax - e.max_place);
            }
            for (std::int64_t i = lo; i <= hi; ++i) {
                const auto ui = static_cast<std::uint32_t>(i);
                if (shift ? shifted_divides(m0, ui, n) : e.lm_images[ui].divides(n)) {
                    consider(best, k, ui);
                    break; // later shifts of the same element are larger
                }
            }
        }
        if (!best) {
            return std::nullopt;
        }
        return std::pair{best->first, decoration(best->first, best->second, c)};
    }

private:
    struct Entry {
        SkewElement value;
        std::uint32_t sdeg = 0;
        Weight weight;
        std::vector<Monomial> lm_images;
        mutable std::vector<std::unique_ptr<SkewElement>> images;
        std::int64_t min_place = 0, max_place = 0;
    };

    std::optional<std::uint32_t> max_shift_of(const Entry &e) const
    {
        if (m_cfg.mode == Mode::sigma_ideal) {
            if (e.weight.is_minus_infinity()) {
                return m_d;
            }
            if (e.weight.value() > m_d) {
                return std::nullopt;
            }
            return m_d - e.weight.value();
        }
        if (e.sdeg > m_d) {
            return std::nullopt;
        }
        return m_d - e.sdeg;
    }

    void consider(std::optional<std::pair<std::size_t, std::uint32_t>> &best, std::size_t k, std::uint32_t i) const
    {
        if (!best || m_cfg.order.compare(lm_image(k, i), lm_image(best->first, best->second)) < 0) {
            best = std::pair{k, i};
        }
    }

    const GBConfig &m_cfg;
    std::uint32_t m_d;
    std::vector<std::unique_ptr<Entry>> m_entries;
    mutable std::mutex m_mutex;
};

// Reduces h modulo the decorated window of R. With full = false only the
// leading term is reduced.
inline SkewElement reduce_with(const ReducerSet &R, SkewElement h, bool full, ReductionLog *log = nullptr)
{
    const MonomialOrder ord = R.config().order;
    std::vector<std::pair<std::uint32_t, Term>> done;
    while (!h.is_zero()) {
        const std::uint32_t c = h.max_sdeg();
        const Term lt = h.top().leading_term();
        if (auto r = R.find_reducer(lt.mono, c)) {
            const auto [k, dec] = *r;
            Monomial q = R.lm_image(k, dec.left).quotient_of(lt.mono);
            h.sub_mul(lt.coeff, q, R.image(k, dec.left), dec.offset);
            if (log) {
                log->push_back({k, dec.left, dec.offset, std::move(q), lt.coeff});
            }
        } else if (full) {
            done.emplace_back(c, lt);
            h.drop_leading();
        } else {
            return h;
        }
    }
    std::vector<SkewElement::Component> cs;
    for (auto &[c, t] : done) {
        if (cs.empty() || cs.back().first != c) {
            cs.emplace_back(c, Polynomial(ord));
        }
        cs.back().second.push_back_smallest(std::move(t));
    }
    std::reverse(cs.begin(), cs.end());
    return SkewElement::from_components(ord, std::move(cs));
}

inline bool lm_is_unit(const SkewElement &g)
{
    return g.max_sdeg() == 0 && g.top().leading_monomial().is_one();
}

// Exists i with sigma^i(m) | n.
inline bool sigma_divides(const Monomial &m, const Monomial &n, const GBConfig &cfg)
{
    if (m.is_one()) {
        return true;
    }
    if (n.is_one()) {
        return false;
    }
    if (cfg.endo.kind() == MonomialEndomorphism::Kind::shift) {
        const std::int64_t lo = std::int64_t(n.factors().front().var.place) - m.factors().front().var.place;
        const std::int64_t hi = std::int64_t(n.factors().back().var.place) - m.factors().back().var.place;
        for (std::int64_t i = std::max<std::int64_t>(lo, 0); i <= hi; ++i) {
            if (shifted_divides(m, static_cast<std::uint32_t>(i), n)) {
                return true;
            }
        }
        return false;
    }
    for (std::uint32_t i = 0; i < 64; ++i) {
        const Monomial img = cfg.endo.apply(m, i);
        if (img.divides(n)) {
            return true;
        }
        if (cfg.order.compare(img, n) > 0) {
            return false;
        }
    }
    return false;
}

inline bool mode_divides(const SkewMonomial &v, const SkewMonomial &w, const GBConfig &cfg)
{
    switch (cfg.mode) {
        case Mode::sigma_ideal:
            return v.sdeg == 0 && w.sdeg == 0 && sigma_divides(v.mono, w.mono, cfg);
        case Mode::two_sided_skew:
            return two_sided_divides(v, w, cfg.endo).has_value();
        case Mode::left_skew:
            return left_divides(v, w, cfg.endo).has_value();
    }
    return false;
}

inline void sort_by_lm(std::vector<SkewElement> &G, MonomialOrder ord)
{
    std::stable_sort(G.begin(), G.end(), [&](const SkewElement &a, const SkewElement &b) {
        return compare(lm_skew(a), lm_skew(b), ord) < 0;
    });
}

inline std::string render_decorated(const GBConfig &cfg, std::size_t k, Decoration dec)
{
    std::string g = "g" + std::to_string(k + 1);
    if (cfg.mode == Mode::sigma_ideal) {
        return dec.left == 0 ? g : "sigma^" + std::to_string(dec.left) + "." + g;
    }
    std::string out;
    if (dec.left > 0) {
        out += "s^" + std::to_string(dec.left) + ".";
    }
    out += g;
    if (dec.offset > dec.left) {
        out += ".s^" + std::to_string(dec.offset - dec.left);
    }
    return out;
}

// Buchberger completion over the decorated window.
class Completion
{
public:
    explicit Completion(const GBConfig &cfg) : m_cfg(cfg), m_d(*cfg.degree_bound), m_basis(m_cfg) {}

    GBResult run(std::vector<SkewElement> inputs)
    {
        GBResult result;
        result.mode = m_cfg.mode;
        result.degree_bound = m_d;

        std::vector<SkewElement> kept;
        for (auto &h : inputs) {
            if (h.is_zero()) {
                continue;
            }
            check_element(h, m_cfg);
            if (lm_is_unit(h)) {
                return unit(result, "constant input generates the unit ideal", h);
            }
            if (window_degree(h) > m_d) {
                ++m_stats.inputs_outside_window;
                result.warnings.push_back("input outside the truncation window dropped");
                continue;
            }
            kept.push_back(std::move(h));
        }
        std::stable_sort(kept.begin(), kept.end(), [&](const SkewElement &a, const SkewElement &b) {
            if (auto c = window_degree(a) <=> window_degree(b); c != 0) {
                return c < 0;
            }
            return compare(lm_skew(a), lm_skew(b), m_cfg.order) < 0;
        });
        for (auto &h : kept) {
            SkewElement r = reduce_with(m_basis, std::move(h), true);
            if (r.is_zero()) {
                continue;
            }
            if (lm_is_unit(r)) {
                return unit(result, "inputs generate the unit ideal", r);
            }
            insert(std::move(r));
        }

        while (!m_queue.empty()) {
            const std::uint32_t sugar = m_queue.begin()->sugar;
            std::vector<Pair> batch;
            while (!m_queue.empty() && m_queue.begin()->sugar == sugar) {
                batch.push_back(m_queue.extract(m_queue.begin()).value());
            }
            std::vector<Pair> live;
            for (auto &p : batch) {
                if (m_cfg.chain_criterion && chain_kills(p)) {
                    ++m_stats.chain_killed;
                    trace(p, "chain criterion");
                } else {
                    live.push_back(std::move(p));
                }
            }
            const std::size_t snapshot = m_basis.size();
            std::vector<SkewElement> reduced = reduce_batch(live);
            for (std::size_t n = 0; n < live.size(); ++n) {
                SkewElement r = std::move(reduced[n]);
                if (!r.is_zero() && m_basis.size() != snapshot) {
                    r = reduce_with(m_basis, std::move(r), true);
                }
                ++m_stats.reduced;
                if (r.is_zero()) {
                    ++m_stats.reduced_to_zero;
                    trace(live[n], "0");
                    continue;
                }
                if (lm_is_unit(r)) {
                    trace(live[n], "1");
                    return unit(result, "the ideal contains a nonzero constant", r);
                }
                const std::size_t k = insert(std::move(r));
                trace(live[n], "g" + std::to_string(k + 1) + " = " + to_string(m_basis.element(k), m_cfg.alphabet));
            }
        }

        for (std::size_t k = 0; k < m_basis.size(); ++k) {
            result.basis.push_back(m_basis.element(k));
        }
        result.stats = m_stats;
        return result;
    }

private:
    struct Pair {
        std::size_t id;
        std::uint32_t sugar;
        SkewMonomial lcm;
        std::size_t left, right;
        Decoration ldec, rdec;
    };

    struct PairLess {
        MonomialOrder ord;
        bool operator()(const Pair &a, const Pair &b) const
        {
            if (a.sugar != b.sugar) {
                return a.sugar < b.sugar;
            }
            if (auto c = compare(a.lcm, b.lcm, ord); c != 0) {
                return c < 0;
            }
            return a.id < b.id;
        }
    };

    // The basis {1}, in the coefficient field of the witness.
    GBResult &unit(GBResult &result, const std::string &why, const SkewElement &witness)
    {
        const FieldElement &c = lc_skew(witness);
        result.unit_ideal = true;
        result.warnings.push_back(why);
        result.basis = {SkewElement(Polynomial::constant(m_cfg.order, c * c.inverse()), 0)};
        result.stats = m_stats;
        return result;
    }

    // Weight in sigma mode, top s-degree otherwise.
    std::uint32_t window_degree(const SkewElement &h) const
    {
        if (m_cfg.mode == Mode::sigma_ideal) {
            const Weight w = h.top().weight();
            return w.is_minus_infinity() ? 0 : w.value();
        }
        return h.max_sdeg();
    }

    std::size_t insert(SkewElement g)
    {
        const std::size_t k = m_basis.add(g);
        ++m_stats.added;
        make_pairs(k);
        return k;
    }

    void make_pairs(std::size_t k)
    {
        for (std::size_t j = 0; j <= k; ++j) {
            switch (m_cfg.mode) {
                case Mode::sigma_ideal: {
                    const bool self = j == k;
                    if (auto top = m_basis.max_shift(j)) {
                        for (std::uint32_t i = self ? 1 : 0; i <= *top; ++i) {
                            push(k, {0, 0}, j, {i, 0}, 0);
                        }
                    }
                    if (!self) {
                        if (auto top = m_basis.max_shift(k)) {
                            for (std::uint32_t i = 1; i <= *top; ++i) {
                                push(j, {0, 0}, k, {i, 0}, 0);
                            }
                        }
                    }
                    break;
                }
                case Mode::two_sided_skew: {
                    const std::uint32_t a = m_basis.sdeg(k), b = m_basis.sdeg(j);
                    for (std::uint32_t i = j == k ? 1 : 0; b + i <= m_d; ++i) {
                        const std::uint32_t c = std::max(a, b + i);
                        push(k, {0, c - a}, j, {i, c - b}, c);
                    }
                    if (j != k) {
                        for (std::uint32_t i = 1; a + i <= m_d; ++i) {
                            const std::uint32_t c = std::max(b, a + i);
                            push(j, {0, c - b}, k, {i, c - a}, c);
                        }
                    }
                    break;
                }
                case Mode::left_skew: {
                    if (j == k) {
                        break;
                    }
                    const std::uint32_t a = m_basis.sdeg(k), b = m_basis.sdeg(j);
                    if (a >= b) {
                        push(k, {0, 0}, j, {a - b, a - b}, a);
                    } else {
                        push(j, {0, 0}, k, {b - a, b - a}, b);
                    }
                    break;
                }
            }
        }
    }

    std::uint32_t decorated_weight(std::size_t k, Decoration dec) const
    {
        const Weight w = m_basis.weight(k);
        return w.is_minus_infinity() ? 0 : w.value() + dec.left;
    }

    void push(std::size_t l, Decoration ld, std::size_t r, Decoration rd, std::uint32_t c)
    {
        if (c > m_d) {
            return;
        }
        const Monomial &ma = m_basis.lm_image(l, ld.left);
        const Monomial &mb = m_basis.lm_image(r, rd.left);
        Pair p{m_next_id++, c, SkewMonomial{lcm(ma, mb), c}, l, r, ld, rd};
        if (m_cfg.mode == Mode::sigma_ideal) {
            const Weight wl = p.lcm.mono.weight();
            p.sugar = std::max({wl.is_minus_infinity() ? 0u : wl.value(), decorated_weight(l, ld), decorated_weight(r, rd)});
            if (p.sugar > m_d) {
                return;
            }
        }
        ++m_stats.considered;
        if (m_cfg.product_criterion && ma.coprime(mb)) {
            ++m_stats.product_killed;
            trace(p, "product criterion");
            return;
        }
        if (!passes_filter(m_cfg.filter, p.lcm.mono, c)) {
            ++m_stats.filtered;
            trace(p, "filtered");
            return;
        }
        m_queue.insert(std::move(p));
    }

    // Whether the pair formed by two decorated elements would be handled:
    // its normalized form passes the filter, or it is coprime and the
    // product criterion applies.
    bool constituent_handled(const Monomial &l, std::uint32_t c, Decoration x, Decoration y, const Monomial &mx,
                             const Monomial &my) const
    {
        if (m_cfg.filter != PairFilter::none) {
            const std::uint32_t down = std::min(x.left, y.left);
            const Monomial base = unshifted(l, down);
            bool ok;
            if (m_cfg.filter == PairFilter::in_V) {
                ok = passes_filter(PairFilter::in_V, base, 0);
            } else {
                const std::uint32_t right = std::min(x.offset - x.left, y.offset - y.left);
                ok = passes_filter(PairFilter::in_R, base, c - down - right);
            }
            if (ok) {
                return true;
            }
        } else {
            return true;
        }
        return m_cfg.product_criterion && mx.coprime(my);
    }

    bool chain_kills(const Pair &p) const
    {
        const std::uint32_t c = p.lcm.sdeg;
        const Monomial &L = p.lcm.mono;
        const Monomial &ma = m_basis.lm_image(p.left, p.ldec.left);
        const Monomial &mb = m_basis.lm_image(p.right, p.rdec.left);
        bool killed = false;
        for (std::size_t k = 0; k < m_basis.size() && !killed; ++k) {
            m_basis.for_each_shift(k, c, [&](std::uint32_t i, const Monomial &mc) {
                if (killed || !mc.divides(L)) {
                    return;
                }
                const Monomial l1 = lcm(ma, mc);
                if (l1 == L) {
                    return;
                }
                const Monomial l2 = lcm(mc, mb);
                if (l2 == L) {
                    return;
                }
                const Decoration dc = m_basis.decoration(k, i, c);
                if (m_cfg.mode == Mode::sigma_ideal && decorated_weight(k, dc) > m_d) {
                    return;
                }
                killed = constituent_handled(l1, c, p.ldec, dc, ma, mc) && constituent_handled(l2, c, dc, p.rdec, mc, mb);
            });
        }
        return killed;
    }

    SkewElement spoly_of(const Pair &p) const
    {
        const Monomial qa = m_basis.lm_image(p.left, p.ldec.left).quotient_of(p.lcm.mono);
        const Monomial qb = m_basis.lm_image(p.right, p.rdec.left).quotient_of(p.lcm.mono);
        const SkewElement &a = m_basis.image(p.left, p.ldec.left);
        const SkewElement &b = m_basis.image(p.right, p.rdec.left);
        SkewElement h(m_cfg.order);
        h.sub_mul(-lc_skew(a), qa, a, p.ldec.offset);
        h.sub_mul(lc_skew(b), qb, b, p.rdec.offset);
        return h;
    }

    std::vector<SkewElement> reduce_batch(const std::vector<Pair> &live) const
    {
        std::vector<SkewElement> out(live.size());
        auto work = [&](std::size_t n) { out[n] = reduce_with(m_basis, spoly_of(live[n]), true); };
        const unsigned threads = std::max(1u, m_cfg.threads);
        if (threads == 1 || live.size() < 2) {
            for (std::size_t n = 0; n < live.size(); ++n) {
                work(n);
            }
            return out;
        }
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        {
            std::vector<std::jthread> pool;
            const unsigned count = static_cast<unsigned>(std::min<std::size_t>(threads, live.size()));
            for (unsigned t = 0; t < count; ++t) {
                pool.emplace_back([&] {
                    for (std::size_t n; (n = next++) < live.size();) {
                        try {
                            work(n);
                        } catch (...) {
                            std::lock_guard lock(error_mutex);
                            if (!error) {
                                error = std::current_exception();
                            }
                        }
                    }
                });
            }
        }
        if (error) {
            std::rethrow_exception(error);
        }
        return out;
    }

    void trace(const Pair &p, const std::string &verdict) const
    {
        if (!m_cfg.trace) {
            return;
        }
        m_cfg.trace("pair " + std::to_string(p.id + 1) + " [" + std::to_string(p.sugar) + "] spoly(" +
                    render_decorated(m_cfg, p.left, p.ldec) + ", " + render_decorated(m_cfg, p.right, p.rdec) +
                    ") -> " + verdict);
    }

    const GBConfig &m_cfg;
    std::uint32_t m_d;
    ReducerSet m_basis;
    std::set<Pair, PairLess> m_queue{PairLess{m_cfg.order}};
    std::size_t m_next_id = 0;
    PairStats m_stats;
};

inline std::vector<SkewElement> interreduce(std::vector<SkewElement> G, const GBConfig &cfg)
{
    std::erase_if(G, [](const SkewElement &g) { return g.is_zero(); });
    for (auto &g : G) {
        g = g.monic();
    }
    sort_by_lm(G, cfg.order);
    std::vector<SkewElement> kept;
    for (auto &g : G) {
        const SkewMonomial m = lm_skew(g);
        const bool redundant = std::any_of(kept.begin(), kept.end(),
                                           [&](const SkewElement &k) { return mode_divides(lm_skew(k), m, cfg); });
        if (!redundant) {
            kept.push_back(std::move(g));
        }
    }
    ReducerSet R(cfg);
    for (const auto &g : kept) {
        R.add(g);
    }
    std::vector<SkewElement> out;
    for (const auto &g : kept) {
        const SkewMonomial m = lm_skew(g);
        SkewElement tail = g;
        tail.drop_leading();
        SkewElement lead = SkewElement::from_monomial(cfg.order, lc_skew(g), m);
        out.push_back(lead + reduce_with(R, std::move(tail), true));
    }
    return out;
}

inline GBResult complete(std::vector<SkewElement> H, const GBConfig &cfg)
{
    validate(cfg);
    Completion run(cfg);
    GBResult result = run.run(std::move(H));
    if (!result.unit_ideal && cfg.interreduce) {
        result.basis = interreduce(std::move(result.basis), cfg);
    }
    sort_by_lm(result.basis, cfg.order);
    return result;
}

inline void require_mode(const GBConfig &cfg, Mode m, const char *op)
{
    if (cfg.mode != m) {
        throw ConfigError(std::string(op) + " needs mode " + to_string(m) + ", configuration says " + to_string(cfg.mode));
    }
}

} // namespace detail

// (l / lt(f)) f - (l / lt(g)) g with l the lcm of the leading monomials.
inline SkewElement spoly(const SkewElement &f, const SkewElement &g)
{
    const SkewMonomial a = lm_skew(f), b = lm_skew(g);
    if (a.sdeg != b.sdeg) {
        throw DomainError("spoly needs equal leading s-degrees, got " + std::to_string(a.sdeg) + " and " +
                          std::to_string(b.sdeg));
    }
    const Monomial l = lcm(a.mono, b.mono);
    SkewElement h(f.order());
    h.sub_mul(-lc_skew(f).inverse(), a.mono.quotient_of(l), f);
    h.sub_mul(lc_skew(g).inverse(), b.mono.quotient_of(l), g);
    return h;
}

inline Polynomial spoly(const Polynomial &f, const Polynomial &g)
{
    return spoly(SkewElement(f, 0), SkewElement(g, 0)).component(0);
}

// Normal form of f modulo the decorated window of G (sigma^i G in sigma
// mode, s^i G s^j in skew mode, s^i G in left mode). The log, if given,
// records every step in terms of the monic G.
inline SkewElement reduce(const SkewElement &f, const std::vector<SkewElement> &G, const GBConfig &cfg,
                          ReductionLog *log = nullptr)
{
    detail::validate(cfg);
    detail::ReducerSet R(cfg);
    for (const auto &g : G) {
        if (!g.is_zero()) {
            detail::check_element(g, cfg);
            R.add(g);
        }
    }
    return detail::reduce_with(R, f, true, log);
}

inline Polynomial reduce(const Polynomial &f, const std::vector<Polynomial> &G, const GBConfig &cfg,
                         ReductionLog *log = nullptr)
{
    std::vector<SkewElement> S;
    for (const auto &g : G) {
        S.emplace_back(g, 0);
    }
    return reduce(SkewElement(f, 0), S, cfg, log).component(0);
}

inline GBResult skew_gbasis(std::vector<SkewElement> H, const GBConfig &cfg)
{
    detail::require_mode(cfg, Mode::two_sided_skew, "skew_gbasis");
    return detail::complete(std::move(H), cfg);
}

inline GBResult left_gbasis(std::vector<SkewElement> H, const GBConfig &cfg)
{
    detail::require_mode(cfg, Mode::left_skew, "left_gbasis");
    return detail::complete(std::move(H), cfg);
}

inline GBResult sigma_gbasis(const std::vector<Polynomial> &H, const GBConfig &cfg)
{
    detail::require_mode(cfg, Mode::sigma_ideal, "sigma_gbasis");
    std::vector<SkewElement> S;
    for (const auto &h : H) {
        S.emplace_back(h, 0);
    }
    return detail::complete(std::move(S), cfg);
}

// Minimal (under the mode's divisibility), tail-reduced, monic, sorted by
// leading monomial.
inline std::vector<SkewElement> interreduce(std::vector<SkewElement> G, const GBConfig &cfg)
{
    detail::validate(cfg);
    auto out = detail::interreduce(std::move(G), cfg);
    detail::sort_by_lm(out, cfg.order);
    return out;
}

inline bool member(const SkewElement &f, const std::vector<SkewElement> &G, const GBConfig &cfg)
{
    detail::validate(cfg);
    if (f.is_zero()) {
        return true;
    }
    const std::uint32_t d = *cfg.degree_bound;
    if (cfg.mode == Mode::sigma_ideal) {
        if (f.max_sdeg() != 0) {
            throw DomainError("sigma_ideal membership is for elements of P");
        }
        const Weight w = f.top().weight();
        if (!w.is_minus_infinity() && w.value() > d) {
            throw WindowError("weight " + w.to_string() + " exceeds the truncation bound " + std::to_string(d));
        }
    } else if (f.max_sdeg() > d) {
        throw WindowError("s-degree " + std::to_string(f.max_sdeg()) + " exceeds the truncation bound " +
                          std::to_string(d));
    }
    detail::ReducerSet R(cfg);
    for (const auto &g : G) {
        if (!g.is_zero()) {
            R.add(g);
        }
    }
    return detail::reduce_with(R, f, false).is_zero();
}

inline bool member(const Polynomial &f, const std::vector<Polynomial> &G, const GBConfig &cfg)
{
    std::vector<SkewElement> S;
    for (const auto &g : G) {
        S.emplace_back(g, 0);
    }
    return member(SkewElement(f, 0), S, cfg);
}

// Enumerates every pair of decorated window elements with equal leading
// s-degree (no criteria; the letterplace filter still applies) and checks
// that each S-polynomial reduces to zero.
inline Certificate certify(const std::vector<SkewElement> &G, const GBConfig &cfg)
{
    detail::validate(cfg);
    detail::ReducerSet R(cfg);
    for (const auto &g : G) {
        if (!g.is_zero()) {
            R.add(g);
        }
    }
    struct Item {
        std::size_t k;
        detail::Decoration dec;
        const Monomial *lm;
    };
    const std::uint32_t d = *cfg.degree_bound;
    const std::uint32_t top = cfg.mode == Mode::sigma_ideal ? 0 : d;
    Certificate cert;
    for (std::uint32_t c = 0; c <= top; ++c) {
        std::vector<Item> items;
        for (std::size_t k = 0; k < R.size(); ++k) {
            R.for_each_shift(k, c, [&](std::uint32_t i, const Monomial &m) { items.push_back({k, R.decoration(k, i, c), &m}); });
        }
        for (std::size_t u = 0; u < items.size(); ++u) {
            for (std::size_t v = u + 1; v < items.size(); ++v) {
                const Monomial l = lcm(*items[u].lm, *items[v].lm);
                if (!detail::passes_filter(cfg.filter, l, c)) {
                    continue;
                }
                ++cert.pairs_checked;
                SkewElement h(cfg.order);
                const auto &a = R.image(items[u].k, items[u].dec.left);
                const auto &b = R.image(items[v].k, items[v].dec.left);
                // R keeps its elements monic.
                h.sub_mul(-lc_skew(a), items[u].lm->quotient_of(l), a, items[u].dec.offset);
                h.sub_mul(lc_skew(b), items[v].lm->quotient_of(l), b, items[v].dec.offset);
                if (!detail::reduce_with(R, std::move(h), false).is_zero()) {
                    cert.ok = false;
                    ++cert.failures;
                    if (cert.sample.size() < 5) {
                        cert.sample.push_back("spoly(" + detail::render_decorated(cfg, items[u].k, items[u].dec) + ", " +
                                              detail::render_decorated(cfg, items[v].k, items[v].dec) + ")");
                    }
                }
            }
        }
    }
    return cert;
}

} // namespace skewgb

#endif
