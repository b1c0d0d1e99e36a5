#pragma once

#include "gammalgo/beta_adic.hpp"
#include "gammalgo/parallel.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gammalgo {

/**
 * Enclosure: an interval with exact field-element endpoints, certified to
 * contain a target real (an infimum, supremum, or gamma itself).
 */
struct Enclosure
{
    QuadElem lo;
    QuadElem hi;

    Enclosure(QuadElem l, QuadElem h) : lo(std::move(l)), hi(std::move(h))
    {
        if (sign_of(hi - lo) < 0) {
            throw std::logic_error("Enclosure: inverted endpoints");
        }
    }

    static Enclosure point(const QuadElem &x) { return Enclosure(x, x); }

    QuadElem width() const { return hi - lo; }
    bool is_point() const { return lo == hi; }

    bool contains(const QuadElem &x) const
    {
        return sign_of(x - lo) >= 0 && sign_of(hi - x) >= 0;
    }

    bool contains(const Enclosure &o) const
    {
        return sign_of(o.lo - lo) >= 0 && sign_of(hi - o.hi) >= 0;
    }

    /// Both operands must contain the common target, so the intersection
    /// is never empty; emptiness indicates a soundness bug upstream.
    Enclosure intersect(const Enclosure &o) const
    {
        const QuadElem &l = sign_of(lo - o.lo) >= 0 ? lo : o.lo;
        const QuadElem &h = sign_of(hi - o.hi) <= 0 ? hi : o.hi;
        if (sign_of(h - l) < 0) {
            throw std::logic_error("Enclosure: empty intersection");
        }
        return Enclosure(l, h);
    }

    Enclosure operator+(const QuadElem &c) const { return Enclosure(lo + c, hi + c); }
};

inline Enclosure operator+(const QuadElem &c, const Enclosure &e) { return e + c; }

enum class Target { Inf, Sup };
enum class Variant { General, DivisibleEven };

/// Comparison constants of the three-case formula for gamma.
struct CaseThresholds
{
    QuadElem t_beta; // beta
    QuadElem t_mid;  // 2*beta - a - 1
    QuadElem t_neg1; // -1
    QuadElem t_low;  // beta - a - 1
};

inline CaseThresholds case_thresholds(const PisotBase &base)
{
    QuadElem beta = base.beta();
    QuadElem a1 = base.rational(Rational(base.a() + 1));
    return CaseThresholds{beta, beta + beta - a1, base.rational(-1), beta - a1};
}

/// Exact test of a > (1+sqrt(5))/2 * b, decided in Q(sqrt(5)) by comparing
/// (2a-b)^2 against 5b^2.
inline bool exceeds_golden_ratio_times_b(const PisotBase &base)
{
    Integer lhs = 2 * base.a() - base.b();
    return lhs > 0 && lhs * lhs > 5 * base.b() * base.b();
}

/// Hypotheses under which gamma = max{0, 1 + inf_j P_{h(j)}(beta')} holds:
/// a > (1+sqrt5)/2 * b, or a = b, or a coprime to b.
inline bool gamma0_hypothesis(const PisotBase &base)
{
    return base.a() == base.b() ||
           boost::multiprecision::gcd(base.a(), base.b()) == 1 ||
           exceeds_golden_ratio_times_b(base);
}

/// A rational upper bound on |beta'|, used only for width-decay auditing.
inline Rational conj_abs_upper_bound(const PisotBase &base)
{
    constexpr unsigned k = 48;
    Integer scaled = base.discriminant() << (2 * k);
    Integer s = boost::multiprecision::sqrt(scaled);
    // sqrt(D) < (s+1)/2^k, hence |beta'| = (sqrt(D)-a)/2 < this bound.
    return Rational(s + 1 - (base.a() << k), Integer(1) << (k + 1));
}

namespace detail {

/// (b-1) / (1 - beta'^2), the common factor of all tail intervals.
inline QuadElem tail_factor(const PisotBase &base)
{
    if (base.b() < 2) {
        throw std::domain_error("tail interval requires b >= 2");
    }
    const QuadElem &bc = base.beta_conj();
    QuadElem one = base.rational(1);
    return base.rational(Rational(base.b() - 1)) / (one - bc * bc);
}

/// Tail interval given pow = beta'^m, where m is the prefix length already
/// fixed (m = n for General, m = 2n for DivisibleEven).
inline Enclosure tail_from_pow(const PisotBase &base, const QuadElem &pow, Variant variant)
{
    QuadElem t = pow * tail_factor(base);
    QuadElem e1 = t * base.beta_conj();
    QuadElem e2 = variant == Variant::General ? t : base.rational(0);
    return sign_of(e1 - e2) <= 0 ? Enclosure(e1, e2) : Enclosure(e2, e1);
}

} // namespace detail

/// The additive tail interval certified to contain the difference between
/// a length-n prefix value and any of its full extensions:
/// beta'^n (b-1)/(1-beta'^2) [beta', 1] in the general case, and
/// beta'^{2n} (b-1)/(1-beta'^2) [beta', 0] when b divides a (n counts digit
/// pairs in that variant).
inline Enclosure tail_interval(const PisotBase &base, std::size_t n, Variant variant)
{
    std::size_t m = variant == Variant::General ? n : 2 * n;
    QuadElem pow = base.rational(1);
    for (std::size_t i = 0; i < m; ++i) {
        pow = pow * base.beta_conj();
    }
    return detail::tail_from_pow(base, pow, variant);
}

/// One frontier candidate: the integer j (representing j, or j - beta for
/// the Sup target), its automaton residue after prefix_len steps, the exact
/// prefix value P_w(beta'), and the prefix itself.
struct Candidate
{
    Integer j;
    ZBetaElem residue;
    QuadElem value;
    DigitWord prefix;
};

/**
 * FrontierState: the pruned candidate set at one depth of the
 * branch-and-prune search, together with mu_n (minimum of prefix values for
 * the Inf target, maximum for Sup) and the certified enclosure of the
 * limit value.
 */
struct FrontierState
{
    Target target;
    Variant variant;
    std::size_t level;      // number of refinements performed
    std::size_t prefix_len; // digits fixed so far (2*level for DivisibleEven)
    std::vector<Candidate> candidates;
    QuadElem mu;
    Enclosure enclosure;
    QuadElem pow_conj;    // beta'^prefix_len
    ZBetaElem step_sigma; // DivisibleEven: b^level / beta^(2*level)
    Integer step;         // DivisibleEven: b^level
};

inline FrontierState init_frontier(const PisotBase &base, Target target, Variant variant)
{
    if (variant == Variant::DivisibleEven) {
        if (base.a() % base.b() != 0) {
            throw std::invalid_argument("init_frontier: paired variant requires b | a");
        }
        if (target != Target::Inf) {
            throw std::invalid_argument("init_frontier: paired variant only runs the Inf target");
        }
    }
    Candidate seed;
    seed.j = 0;
    seed.residue = target == Target::Sup ? ZBetaElem(0, -1) : ZBetaElem(0, 0);
    seed.value = base.rational(0);
    QuadElem one = base.rational(1);
    Enclosure enc = detail::tail_from_pow(base, one, variant);
    return FrontierState{target,
                         variant,
                         0,
                         0,
                         {std::move(seed)},
                         base.rational(0),
                         std::move(enc),
                         one,
                         ZBetaElem(1, 0),
                         Integer(1)};
}

/// The candidate attaining mu (ties broken by smallest j).
inline const Candidate &best_candidate(const FrontierState &state)
{
    if (state.candidates.empty()) {
        throw std::logic_error("best_candidate: empty frontier");
    }
    const Candidate *best = &state.candidates.front();
    for (const Candidate &c : state.candidates) {
        int cmp = sign_of(c.value - best->value);
        if (state.target == Target::Sup) {
            cmp = -cmp;
        }
        if (cmp < 0 || (cmp == 0 && c.j < best->j)) {
            best = &c;
        }
    }
    return *best;
}

/**
 * One refinement step.  Every candidate j is expanded to the residues
 * j + s_{n-1} * {0, ..., r_n - 1} (j + b^{n-1} * {0, ..., b-1} digit pairs
 * in the DivisibleEven variant), extending the stored automaton residue by
 * one (resp. two) digits.  mu is recomputed, candidates whose prefix value
 * falls outside the reachable band around mu are pruned, and the enclosure
 * is tightened by intersecting with the previous one.
 */
inline FrontierState refine(const PisotBase &base, const FrontierState &state,
                            const CongruenceLadder &ladder, unsigned threads = 1)
{
    const std::size_t n = state.level + 1;
    const QuadElem &bc = base.beta_conj();
    QuadElem factor = detail::tail_factor(base);

    std::vector<Candidate> children;
    QuadElem pow_next = base.rational(1);
    FrontierState next = state;
    next.level = n;

    if (state.variant == Variant::General) {
        if (ladder.levels() < n) {
            throw std::invalid_argument("refine: ladder does not cover the next level");
        }
        const Integer &s_prev = ladder.s[n - 1];
        const ZBetaElem &sigma_prev = ladder.sigma[n - 1];
        if (ladder.r[n] > 1000000) {
            throw std::overflow_error("refine: branching factor too large");
        }
        const std::size_t r = ladder.r[n].convert_to<std::size_t>();
        next.prefix_len = state.prefix_len + 1;
        pow_next = state.pow_conj * bc;

        children.resize(state.candidates.size() * r,
                        Candidate{Integer(0), ZBetaElem(), base.rational(0), DigitWord()});
        parallel_for(state.candidates.size(), threads, [&](std::size_t pi) {
            const Candidate &parent = state.candidates[pi];
            for (std::size_t t = 0; t < r; ++t) {
                ZBetaElem z = parent.residue + sigma_prev * Integer(t);
                Integer u = digit(base, z);
                Candidate &child = children[pi * r + t];
                child.j = parent.j + s_prev * Integer(t);
                child.value = parent.value + state.pow_conj * Rational(u);
                child.prefix = parent.prefix;
                child.prefix.push_back(std::move(u));
                child.residue = shift(base, z);
            }
        });
    } else {
        Integer c = base.a() / base.b();
        if (base.b() > 1000000) {
            throw std::overflow_error("refine: branching factor too large");
        }
        const std::size_t r = base.b().convert_to<std::size_t>();
        next.prefix_len = state.prefix_len + 2;
        QuadElem pow_odd = state.pow_conj * bc;
        pow_next = pow_odd * bc;

        children.resize(state.candidates.size() * r,
                        Candidate{Integer(0), ZBetaElem(), base.rational(0), DigitWord()});
        parallel_for(state.candidates.size(), threads, [&](std::size_t pi) {
            const Candidate &parent = state.candidates[pi];
            for (std::size_t d = 0; d < r; ++d) {
                ZBetaElem z = parent.residue + state.step_sigma * Integer(d);
                Integer u0 = digit(base, z);
                z = shift(base, z);
                Integer u1 = digit(base, z);
                Candidate &child = children[pi * r + d];
                child.j = parent.j + state.step * Integer(d);
                child.value = parent.value + state.pow_conj * Rational(u0) + pow_odd * Rational(u1);
                child.prefix = parent.prefix;
                child.prefix.push_back(std::move(u0));
                child.prefix.push_back(std::move(u1));
                child.residue = shift(base, z);
            }
        });
        next.step = state.step * base.b();
        // b^n / beta^{2n} = (b^{n-1} / beta^{2n-2}) * (1 + a*c - c*beta).
        next.step_sigma = zb_mul(base, state.step_sigma, ZBetaElem(1 + base.a() * c, -c));
    }

    // mu_n: an order-free min/max fold over the children.
    const bool want_min = state.target == Target::Inf;
    QuadElem mu = children.front().value;
    for (const Candidate &child : children) {
        int cmp = sign_of(child.value - mu);
        if (want_min ? cmp < 0 : cmp > 0) {
            mu = child.value;
        }
    }

    // Keep only candidates whose extensions can still reach the optimum.
    QuadElem abs_pow = abs_of(pow_next);
    std::vector<Candidate> kept;
    kept.reserve(children.size());
    if (state.variant == Variant::General) {
        QuadElem band = abs_pow * base.rational(Rational(base.b() - 1)) /
                        (base.rational(1) + bc);
        for (Candidate &child : children) {
            int cmp = sign_of(child.value - mu);
            QuadElem gap = want_min ? child.value - mu : mu - child.value;
            if (cmp == 0 || sign_of(gap - band) <= 0) {
                kept.push_back(std::move(child));
            }
        }
    } else {
        QuadElem band = abs_pow * abs_of(bc) * factor; // |beta'|^{2n+1} (b-1)/(1-beta'^2)
        for (Candidate &child : children) {
            if (sign_of(child.value - mu - band) < 0) {
                kept.push_back(std::move(child));
            }
        }
    }

    next.candidates = std::move(kept);
    next.mu = std::move(mu);
    next.pow_conj = std::move(pow_next);
    Enclosure raw = detail::tail_from_pow(base, next.pow_conj, state.variant) + next.mu;
    next.enclosure = raw.intersect(state.enclosure);
    return next;
}

enum class GammaClass { Zero, One, Interior, Undecided };
enum class GammaMethod { ClosedFormA, ClassificationAbZ, EngineGamma0, EngineGeneral };

/**
 * GammaResult: the certified answer for one base.  Zero and One are exact
 * certificates; Interior carries an enclosure within [0,1]; Undecided
 * carries the best enclosure obtained before the depth cap.
 */
struct GammaResult
{
    PisotBase base;
    GammaClass classification;
    GammaMethod method;
    Enclosure gamma_enclosure;
    std::size_t depth_used = 0;
    DigitWord witness_prefix;
    std::optional<Enclosure> inf_enclosure;
    std::optional<Enclosure> sup_enclosure;

    GammaResult(PisotBase b, GammaClass cls, GammaMethod m, Enclosure enc)
        : base(std::move(b)), classification(cls), method(m), gamma_enclosure(std::move(enc))
    {
    }
};

struct ClassifyOutcome
{
    bool resolved;
    GammaClass cls;
    std::optional<Enclosure> gamma_enclosure;
};

namespace detail {

inline Enclosure clamp_unit(const PisotBase &base, const Enclosure &e)
{
    QuadElem zero = base.rational(0);
    QuadElem one = base.rational(1);
    return e.intersect(Enclosure(zero, one));
}

} // namespace detail

/**
 * Applies the three-case formula with exact threshold comparisons.  If an
 * enclosure straddles a threshold the answer is "deepen" (resolved =
 * false), carrying a sound-but-loose gamma enclosure for depth-capped
 * reporting.  When the gamma0 hypothesis holds the supremum enclosure is
 * not needed and gamma = max{0, 1 + inf}.
 */
inline ClassifyOutcome classify(const PisotBase &base, const Enclosure &inf_enc,
                                const std::optional<Enclosure> &sup_enc)
{
    CaseThresholds th = case_thresholds(base);
    QuadElem zero = base.rational(0);
    QuadElem one = base.rational(1);

    if (sign_of(inf_enc.hi - th.t_neg1) < 0) {
        return {true, GammaClass::Zero, Enclosure::point(zero)};
    }
    if (sup_enc && sign_of(sup_enc->lo - th.t_beta) > 0) {
        return {true, GammaClass::Zero, Enclosure::point(zero)};
    }

    if (gamma0_hypothesis(base)) {
        if (sign_of(inf_enc.lo - th.t_neg1) > 0) {
            Enclosure g = detail::clamp_unit(base, Enclosure(one + inf_enc.lo, one + inf_enc.hi));
            return {true, GammaClass::Interior, std::move(g)};
        }
    } else if (sup_enc) {
        bool sup_below_beta = sign_of(sup_enc->hi - th.t_beta) <= 0;
        if (sup_below_beta && sign_of(sup_enc->lo - th.t_mid) > 0 &&
            sign_of(inf_enc.lo - th.t_low) >= 0) {
            // gamma = beta - a, exactly.
            return {true, GammaClass::Interior,
                    Enclosure::point(th.t_beta - base.rational(Rational(base.a())))};
        }
        bool inf_above_neg1 = sign_of(inf_enc.lo - th.t_neg1) >= 0;
        bool middle_excluded = sign_of(sup_enc->hi - th.t_mid) <= 0 ||
                               sign_of(inf_enc.hi - th.t_low) < 0;
        if (sup_below_beta && inf_above_neg1 && middle_excluded) {
            Enclosure g = detail::clamp_unit(base, Enclosure(one + inf_enc.lo, one + inf_enc.hi));
            return {true, GammaClass::Interior, std::move(g)};
        }
    }

    // Not resolved; gamma still satisfies 0 <= gamma <= max{0, 1 + inf}.
    QuadElem hi = one + inf_enc.hi;
    if (sign_of(hi - one) > 0) {
        hi = one;
    }
    if (sign_of(hi) < 0) {
        hi = zero;
    }
    return {false, GammaClass::Undecided, Enclosure(zero, std::move(hi))};
}

/// Exact value from the coprime closed form: 1 - (b-1)b*beta/(beta^2-b^2)
/// when a > b(b-1), 0 otherwise; disengaged unless gcd(a, b) = 1.
inline std::optional<QuadElem> closed_form_A(const PisotBase &base)
{
    if (boost::multiprecision::gcd(base.a(), base.b()) != 1) {
        return std::nullopt;
    }
    if (base.a() > base.b() * (base.b() - 1)) {
        const QuadElem &beta = base.beta();
        QuadElem num = beta * Rational((base.b() - 1) * base.b());
        QuadElem den = beta * beta - base.rational(Rational(base.b() * base.b()));
        return base.rational(1) - num / den;
    }
    return base.rational(0);
}

enum class AbZClass { One, Zero, InteriorUnknown };

/// The complete classification for b | a: gamma = 1 iff a >= b^2 or
/// (a,b) in {(24,6), (30,6)}; gamma = 0 for a = b >= 3; otherwise strictly
/// between and the engine must run.
inline std::optional<AbZClass> classify_abZ(const PisotBase &base)
{
    if (base.a() % base.b() != 0) {
        return std::nullopt;
    }
    if (base.a() >= base.b() * base.b() ||
        (base.b() == 6 && (base.a() == 24 || base.a() == 30))) {
        return AbZClass::One;
    }
    if (base.a() == base.b() && base.b() >= 3) {
        return AbZClass::Zero;
    }
    return AbZClass::InteriorUnknown;
}

struct GammaOptions
{
    unsigned digits = 12;
    std::size_t max_depth = 400; // automaton steps
    unsigned threads = 1;        // 0 = hardware concurrency
    bool force_engine = false;   // skip the closed-form dispatch (testing aid)
    bool audit = true;           // check nesting and width decay every step
};

namespace detail {

inline GammaResult run_engine(const PisotBase &base, Variant variant, bool need_sup,
                              const GammaOptions &opts)
{
    const std::size_t steps_per = variant == Variant::DivisibleEven ? 2 : 1;
    CongruenceLadder ladder;
    if (variant == Variant::General) {
        extend_ladder(base, ladder, 1);
    }

    FrontierState inf_st = init_frontier(base, Target::Inf, variant);
    std::optional<FrontierState> sup_st;
    if (need_sup) {
        sup_st = init_frontier(base, Target::Sup, Variant::General);
    }

    const Rational tol(1, pow10(opts.digits));
    const Rational rate_bound = [&] {
        Rational r = conj_abs_upper_bound(base);
        return steps_per == 2 ? r * r : r;
    }();

    std::optional<ClassifyOutcome> outcome;
    bool resolved_interior = false;
    Enclosure gamma_enc = Enclosure::point(base.rational(0));

    while (true) {
        if (inf_st.prefix_len + steps_per > opts.max_depth) {
            break; // depth cap: report Undecided below
        }
        QuadElem prev_width = inf_st.enclosure.width();
        std::size_t next_level = inf_st.level + 1;
        if (variant == Variant::General) {
            extend_ladder(base, ladder, next_level);
        }
        inf_st = refine(base, inf_st, ladder, opts.threads);
        if (sup_st) {
            *sup_st = refine(base, *sup_st, ladder, opts.threads);
        }
        if (opts.audit) {
            QuadElem allowed = prev_width * rate_bound;
            if (sign_of(inf_st.enclosure.width() - allowed) > 0) {
                throw std::logic_error("gamma: enclosure width decay slower than |beta'| rate");
            }
        }

        outcome = classify(base, inf_st.enclosure,
                           sup_st ? std::optional<Enclosure>(sup_st->enclosure) : std::nullopt);
        if (outcome->resolved) {
            if (outcome->cls == GammaClass::Zero) {
                GammaResult res(base, GammaClass::Zero,
                                need_sup ? GammaMethod::EngineGeneral : GammaMethod::EngineGamma0,
                                Enclosure::point(base.rational(0)));
                res.depth_used = inf_st.prefix_len;
                res.witness_prefix = best_candidate(inf_st).prefix;
                res.inf_enclosure = inf_st.enclosure;
                if (sup_st) {
                    res.sup_enclosure = sup_st->enclosure;
                }
                return res;
            }
            resolved_interior = true;
            gamma_enc = *outcome->gamma_enclosure;
            if (gamma_enc.is_point() ||
                (sign_of(gamma_enc.width() - base.rational(tol)) < 0 &&
                 to_decimal(gamma_enc.lo, opts.digits) == to_decimal(gamma_enc.hi, opts.digits))) {
                GammaResult res(base, GammaClass::Interior,
                                need_sup ? GammaMethod::EngineGeneral : GammaMethod::EngineGamma0,
                                std::move(gamma_enc));
                res.depth_used = inf_st.prefix_len;
                res.witness_prefix = best_candidate(inf_st).prefix;
                res.inf_enclosure = inf_st.enclosure;
                if (sup_st) {
                    res.sup_enclosure = sup_st->enclosure;
                }
                return res;
            }
        }
    }

    Enclosure undecided = resolved_interior
                              ? gamma_enc
                              : (outcome && outcome->gamma_enclosure
                                     ? *outcome->gamma_enclosure
                                     : Enclosure(base.rational(0), base.rational(1)));
    GammaResult res(base, GammaClass::Undecided,
                    need_sup ? GammaMethod::EngineGeneral : GammaMethod::EngineGamma0,
                    std::move(undecided));
    res.depth_used = inf_st.prefix_len;
    res.witness_prefix = best_candidate(inf_st).prefix;
    res.inf_enclosure = inf_st.enclosure;
    if (sup_st) {
        res.sup_enclosure = sup_st->enclosure;
    }
    return res;
}

} // namespace detail

/**
 * Computes gamma for the base.  Dispatch: the coprime closed form when
 * gcd(a,b) = 1 (covers b = 1); the divisor classification when b | a, with
 * the paired-digit frontier for the cells it leaves open; otherwise the
 * general frontier, adding the Sup frontier whenever the gamma0 hypothesis
 * fails.  Undecided (at the depth cap) is a result, not an error.
 */
inline GammaResult gamma(const PisotBase &base, const GammaOptions &opts = {})
{
    if (opts.digits < 1 || opts.max_depth < 1) {
        throw std::invalid_argument("gamma: digits and max_depth must be >= 1");
    }
    const bool fast_paths = !opts.force_engine || base.b() == 1;
    if (fast_paths) {
        if (std::optional<QuadElem> v = closed_form_A(base)) {
            QuadElem one = base.rational(1);
            GammaClass cls = *v == one              ? GammaClass::One
                             : sign_of(*v) == 0     ? GammaClass::Zero
                                                    : GammaClass::Interior;
            GammaResult res(base, cls, GammaMethod::ClosedFormA, Enclosure::point(*v));
            if (base.a() > base.b() * (base.b() - 1)) {
                res.inf_enclosure = Enclosure::point(*v - one);
            }
            return res;
        }
        if (std::optional<AbZClass> c = classify_abZ(base)) {
            if (*c == AbZClass::One) {
                return GammaResult(base, GammaClass::One, GammaMethod::ClassificationAbZ,
                                   Enclosure::point(base.rational(1)));
            }
            if (*c == AbZClass::Zero) {
                return GammaResult(base, GammaClass::Zero, GammaMethod::ClassificationAbZ,
                                   Enclosure::point(base.rational(0)));
            }
        }
    }

    Variant variant = base.a() % base.b() == 0 ? Variant::DivisibleEven : Variant::General;
    bool need_sup = variant == Variant::General && !gamma0_hypothesis(base);
    return detail::run_engine(base, variant, need_sup, opts);
}

inline GammaResult gamma(const PisotBase &base, unsigned digits, std::size_t max_depth)
{
    GammaOptions opts;
    opts.digits = digits;
    opts.max_depth = max_depth;
    return gamma(base, opts);
}

enum class TableCell { Zero, One, Star };

struct TableGrid
{
    std::size_t b_max = 0;
    std::size_t ratio_max = 0;
    std::vector<std::vector<TableCell>> cells; // cells[b-1][c-1]
};

/// The 0 / 1 / strictly-interior grid over bases a = c*b.  A Star cell
/// requires a certified enclosure with 0 < gamma < 1.
inline TableGrid table_grid(std::size_t b_max, std::size_t ratio_max,
                            const GammaOptions &opts = {})
{
    if (b_max < 1 || ratio_max < 1) {
        throw std::invalid_argument("table_grid: parameters must be >= 1");
    }
    TableGrid grid{b_max, ratio_max, {}};
    grid.cells.reserve(b_max);
    for (std::size_t b = 1; b <= b_max; ++b) {
        std::vector<TableCell> row;
        row.reserve(ratio_max);
        for (std::size_t c = 1; c <= ratio_max; ++c) {
            PisotBase base = make_base(Integer(c) * b, Integer(b));
            std::optional<AbZClass> cls = classify_abZ(base);
            if (!cls) {
                throw std::logic_error("table_grid: b must divide a");
            }
            if (*cls == AbZClass::One) {
                row.push_back(TableCell::One);
                continue;
            }
            if (*cls == AbZClass::Zero) {
                row.push_back(TableCell::Zero);
                continue;
            }
            // gamma = max{0, 1 + inf}: Zero once inf < -1 is certified,
            // Star once -1 < inf < 0 is certified.
            FrontierState st = init_frontier(base, Target::Inf, Variant::DivisibleEven);
            CongruenceLadder unused;
            QuadElem neg1 = base.rational(-1);
            QuadElem zero = base.rational(0);
            bool done = false;
            while (st.prefix_len + 2 <= opts.max_depth) {
                st = refine(base, st, unused, opts.threads);
                if (sign_of(st.enclosure.hi - neg1) < 0) {
                    row.push_back(TableCell::Zero);
                    done = true;
                    break;
                }
                if (sign_of(st.enclosure.lo - neg1) > 0 && sign_of(st.enclosure.hi - zero) < 0) {
                    row.push_back(TableCell::Star);
                    done = true;
                    break;
                }
            }
            if (!done) {
                throw std::runtime_error("table_grid: cell undecided at the depth cap");
            }
        }
        grid.cells.push_back(std::move(row));
    }
    return grid;
}

} // namespace gammalgo
