#pragma once

#include "gammalgo/gamma_engine.hpp"
#include "gammalgo/parallel.hpp"
#include "gammalgo/qfield.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gammalgo {

/**
 * FieldPoint: p + q*beta with rational coordinates, the (1, beta)-basis
 * representation of an element of Q(beta).  Canonical rationals make
 * equality structural.
 */
struct FieldPoint
{
    Rational p;
    Rational q;

    FieldPoint() : p(0), q(0) {}
    FieldPoint(Rational pp, Rational qq) : p(std::move(pp)), q(std::move(qq)) {}

    bool operator==(const FieldPoint &o) const { return p == o.p && q == o.q; }
    bool operator!=(const FieldPoint &o) const { return !(*this == o); }
};

struct FieldPointHash
{
    std::size_t operator()(const FieldPoint &x) const
    {
        std::size_t hp = std::hash<Rational>{}(x.p);
        std::size_t hq = std::hash<Rational>{}(x.q);
        return hp ^ (hq + 0x9e3779b97f4a7c15ULL + (hp << 6) + (hp >> 2));
    }
};

inline QuadElem field_point_value(const PisotBase &base, const FieldPoint &x)
{
    // p + q*beta = (p + q*a/2) + (q/2)*sqrt(D).
    return QuadElem(x.p + x.q * Rational(base.a(), 2), x.q / 2, base.discriminant());
}

/**
 * OrbitReport: the outcome of exact orbit simulation of the
 * beta-transformation T(x) = beta*x - floor(beta*x) started at a field
 * point.  purely_periodic holds exactly when the first repeated point is
 * the starting point itself.
 */
struct OrbitReport
{
    FieldPoint input;
    std::size_t preperiod_length = 0;
    std::size_t period_length = 0;
    bool purely_periodic = false;
    DigitWord digits_seen;
};

/// One exact step of the beta-transformation.  Requires 0 <= x < 1.
inline std::pair<Integer, FieldPoint> t_step(const PisotBase &base, const FieldPoint &x)
{
    QuadElem value = field_point_value(base, x);
    if (sign_of(value) < 0 || sign_of(value - base.rational(1)) >= 0) {
        throw std::domain_error("t_step: point outside [0, 1)");
    }
    // beta * (p + q*beta) = q*b + (p + q*a)*beta.
    FieldPoint bx(x.q * Rational(base.b()), x.p + x.q * Rational(base.a()));
    Integer d = floor_of(field_point_value(base, bx));
    if (d < 0 || d > base.a()) {
        // Renyi digits lie in {0, ..., floor(beta)} and floor(beta) = a.
        throw std::logic_error("t_step: digit out of range");
    }
    FieldPoint next(bx.p - Rational(d), bx.q);
    return {std::move(d), std::move(next)};
}

inline constexpr std::size_t default_orbit_cap = 1000000;

/// Decides pure periodicity by exact cycle detection: iterate T, keying
/// visited points by canonical form until a repeat occurs.  The orbit of a
/// field point under a Pisot base is finite, so exceeding the cap is an
/// error, never an answer.
inline OrbitReport is_purely_periodic(const PisotBase &base, const FieldPoint &x,
                                      std::size_t orbit_cap = default_orbit_cap)
{
    OrbitReport report;
    report.input = x;
    std::unordered_map<FieldPoint, std::size_t, FieldPointHash> seen;
    FieldPoint cur = x;
    for (std::size_t step = 0;; ++step) {
        if (step > orbit_cap) {
            throw std::runtime_error("is_purely_periodic: orbit cap exceeded");
        }
        auto [it, inserted] = seen.emplace(cur, step);
        if (!inserted) {
            report.preperiod_length = it->second;
            report.period_length = step - it->second;
            report.purely_periodic = it->second == 0;
            return report;
        }
        auto [d, next] = t_step(base, cur);
        report.digits_seen.push_back(std::move(d));
        cur = std::move(next);
    }
}

struct ScanHit
{
    Rational x;
    OrbitReport report;
};

namespace detail {

inline Integer mod_inverse(Integer a, const Integer &m)
{
    // Extended Euclid; m >= 1, gcd(a, m) = 1.
    Integer r0 = m, r1 = a % m, t0 = 0, t1 = 1;
    if (r1 < 0) {
        r1 += m;
    }
    while (r1 != 0) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0 != 1) {
        throw std::logic_error("mod_inverse: arguments not coprime");
    }
    Integer inv = t0 % m;
    return inv < 0 ? Integer(inv + m) : inv;
}

struct Fraction
{
    Integer num;
    Integer den;
};

/// The largest fraction < x with denominator at most n (x in (0, 1]).
inline Fraction farey_predecessor(const Rational &x, const Integer &n)
{
    Fraction best{-1, 1};
    Rational best_val(-1);
    for (Integer q = 1; q <= n; ++q) {
        Integer p = floor_div(rat_num(x) * q, rat_den(x));
        if ((rat_num(x) * q) % rat_den(x) == 0) {
            --p; // x itself has denominator q; step strictly below
        }
        if (p < 0) {
            continue;
        }
        Rational val(p, q);
        if (val > best_val) {
            best_val = val;
            Integer g = boost::multiprecision::gcd(p, q);
            best = Fraction{p / (g == 0 ? 1 : g), q / (g == 0 ? 1 : g)};
        }
    }
    return best;
}

/// The Farey-sequence successor of the reduced fraction a/b in F_n.
inline Fraction farey_successor(const Fraction &f, const Integer &n)
{
    // Neighbors satisfy c*b - a*d = 1: d is the largest value <= n with
    // d = -a^{-1} (mod b).
    Integer d0 = f.den == 1 ? Integer(0) : (f.den - mod_inverse(f.num, f.den)) % f.den;
    Integer d = d0 + f.den * floor_div(n - d0, f.den);
    Integer c = (f.num * d + 1) / f.den;
    return {std::move(c), std::move(d)};
}

} // namespace detail

/**
 * Tests every reduced p/q in [lo, hi) with q <= q_max and gcd(q, b) = 1,
 * enumerating in Farey order (ascending, each reduced fraction exactly
 * once), and returns the ones whose expansion is not purely periodic.
 */
inline std::vector<ScanHit> scan(const PisotBase &base, const Integer &q_max,
                                 const Rational &lo, const Rational &hi,
                                 unsigned threads = 1,
                                 std::size_t orbit_cap = default_orbit_cap)
{
    if (q_max < 2) {
        throw std::invalid_argument("scan: q_max must be >= 2");
    }
    if (!(lo >= 0 && lo < hi && hi <= 1)) {
        throw std::invalid_argument("scan: require 0 <= lo < hi <= 1");
    }

    detail::Fraction prev{0, 1}, cur{0, 1};
    if (lo == 0) {
        cur = detail::Fraction{0, 1};
        prev = detail::Fraction{-1, 1}; // virtual left neighbor of 0/1
    } else {
        prev = detail::farey_predecessor(lo, q_max);
        cur = detail::farey_successor(prev, q_max);
    }

    std::vector<Rational> admissible;
    while (Rational(cur.num, cur.den) < hi) {
        if (boost::multiprecision::gcd(cur.den, base.b()) == 1) {
            admissible.emplace_back(cur.num, cur.den);
        }
        Integer k = floor_div(q_max + prev.den, cur.den);
        detail::Fraction nxt{k * cur.num - prev.num, k * cur.den - prev.den};
        prev = std::move(cur);
        cur = std::move(nxt);
    }

    std::vector<std::optional<OrbitReport>> reports(admissible.size());
    parallel_for(admissible.size(), threads, [&](std::size_t i) {
        const Rational &x = admissible[i];
        OrbitReport rep = is_purely_periodic(base, FieldPoint(x, Rational(0)), orbit_cap);
        if (!rep.purely_periodic) {
            reports[i] = std::move(rep);
        }
    });

    std::vector<ScanHit> hits;
    for (std::size_t i = 0; i < admissible.size(); ++i) {
        if (reports[i]) {
            hits.push_back(ScanHit{admissible[i], std::move(*reports[i])});
        }
    }
    return hits;
}

/**
 * CrossCheckReport: oracle-versus-engine consistency.  Fail means a
 * certified bound was violated (a genuine bug); Inconclusive means the
 * density direction found no witness at the given q_max, which the theory
 * does not exclude.
 */
struct CrossCheckReport
{
    enum class Status { Pass, Fail, Inconclusive };
    Status status = Status::Pass;
    std::optional<Rational> violation;       // non-purely-periodic point below the bound
    std::optional<Rational> density_witness; // non-purely-periodic point just above gamma
};

namespace detail {

inline Rational truncate_down(const QuadElem &v, unsigned digits)
{
    Integer scale = pow10(digits);
    return Rational(floor_of(v * Rational(scale)), scale);
}

} // namespace detail

/// Verifies that (i) no admissible rational with a non-purely-periodic
/// expansion lies strictly below the result's lower gamma bound, and
/// (ii) for Interior/Zero results some non-purely-periodic admissible
/// rational exists within 1/20 above the upper bound (density direction;
/// inconclusive when absent at this q_max).
inline CrossCheckReport cross_check(const PisotBase &base, const GammaResult &result,
                                    const Integer &q_max, unsigned threads = 1)
{
    CrossCheckReport report;
    const Enclosure &g = result.gamma_enclosure;

    Rational lower = detail::truncate_down(g.lo, 12);
    if (lower > 1) {
        lower = 1;
    }
    if (lower > 0) {
        std::vector<ScanHit> hits = scan(base, q_max, Rational(0), lower, threads);
        if (!hits.empty()) {
            report.status = CrossCheckReport::Status::Fail;
            report.violation = hits.front().x;
            return report;
        }
    }

    if (result.classification == GammaClass::One) {
        return report; // nothing above gamma to witness
    }

    Rational upper = detail::truncate_down(g.hi, 12) + Rational(1, pow10(12));
    Rational window_hi = upper + Rational(1, 20);
    if (window_hi > 1) {
        window_hi = 1;
    }
    if (upper < window_hi) {
        std::vector<ScanHit> hits = scan(base, q_max, upper, window_hi, threads);
        if (!hits.empty()) {
            report.density_witness = hits.front().x;
            return report;
        }
    }
    report.status = CrossCheckReport::Status::Inconclusive;
    return report;
}

} // namespace gammalgo
