#pragma once

#include "gammalgo/qfield.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gammalgo {

/**
 * ZBetaElem: x0 + x1*beta with integer coordinates.  Since {1, beta} is a
 * module basis of Z[beta], the representation is unique.
 */
struct ZBetaElem
{
    Integer x0;
    Integer x1;

    ZBetaElem() : x0(0), x1(0) {}
    ZBetaElem(Integer a0, Integer a1) : x0(std::move(a0)), x1(std::move(a1)) {}

    bool operator==(const ZBetaElem &o) const { return x0 == o.x0 && x1 == o.x1; }
    bool operator!=(const ZBetaElem &o) const { return !(*this == o); }

    ZBetaElem operator+(const ZBetaElem &o) const { return {x0 + o.x0, x1 + o.x1}; }
    ZBetaElem operator-(const ZBetaElem &o) const { return {x0 - o.x0, x1 - o.x1}; }
    ZBetaElem operator*(const Integer &k) const { return {x0 * k, x1 * k}; }
};

/// Product in Z[beta], reduced with beta^2 = a*beta + b.
inline ZBetaElem zb_mul(const PisotBase &base, const ZBetaElem &x, const ZBetaElem &y)
{
    Integer cross = x.x1 * y.x1;
    return {x.x0 * y.x0 + base.b() * cross,
            x.x0 * y.x1 + x.x1 * y.x0 + base.a() * cross};
}

/// Multiplication by beta: (x0 + x1*beta)*beta = b*x1 + (x0 + a*x1)*beta.
inline ZBetaElem zb_mul_beta(const PisotBase &base, const ZBetaElem &x)
{
    return {base.b() * x.x1, x.x0 + base.a() * x.x1};
}

/// Embeds x0 + x1*beta into Q(sqrt(D)).
inline QuadElem zb_to_quad(const PisotBase &base, const ZBetaElem &x)
{
    return base.integer(x.x0) + base.beta() * Rational(x.x1);
}

/**
 * DigitWord: a finite word over the alphabet {0, ..., b-1}.
 */
struct DigitWord
{
    std::vector<Integer> digits;

    DigitWord() = default;
    explicit DigitWord(std::vector<Integer> d) : digits(std::move(d)) {}

    std::size_t size() const { return digits.size(); }
    bool empty() const { return digits.empty(); }
    const Integer &operator[](std::size_t i) const { return digits[i]; }

    bool operator==(const DigitWord &o) const { return digits == o.digits; }
    bool operator!=(const DigitWord &o) const { return !(*this == o); }

    bool all_zero() const
    {
        for (const Integer &d : digits) {
            if (d != 0) {
                return false;
            }
        }
        return true;
    }

    void push_back(Integer d) { digits.push_back(std::move(d)); }

    /// Concatenated decimal digits; dot-separated once a digit needs more
    /// than one decimal character.
    std::string str() const
    {
        bool wide = false;
        for (const Integer &d : digits) {
            if (d > 9) {
                wide = true;
                break;
            }
        }
        std::string out;
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (wide && i > 0) {
                out += '.';
            }
            out += digits[i].str();
        }
        return out;
    }

    static DigitWord parse(const std::string &text)
    {
        DigitWord w;
        if (text.find('.') != std::string::npos) {
            std::size_t pos = 0;
            while (pos <= text.size()) {
                std::size_t dot = text.find('.', pos);
                if (dot == std::string::npos) {
                    dot = text.size();
                }
                w.push_back(Integer(text.substr(pos, dot - pos)));
                pos = dot + 1;
            }
        } else {
            for (char c : text) {
                if (c < '0' || c > '9') {
                    throw std::invalid_argument("DigitWord::parse: invalid digit");
                }
                w.push_back(Integer(c - '0'));
            }
        }
        return w;
    }
};

/// The digit map: the unique d in {0,...,b-1} with z - d in beta*Z[beta].
/// This is x0 reduced modulo b, taken nonnegative (beta*Z[beta] meets Z
/// exactly in b*Z).
inline Integer digit(const PisotBase &base, const ZBetaElem &z)
{
    Integer r = z.x0 % base.b();
    if (r < 0) {
        r += base.b();
    }
    return r;
}

/// One automaton step: (z - digit(z)) / beta, exactly in Z[beta].
inline ZBetaElem shift(const PisotBase &base, const ZBetaElem &z)
{
    Integer u = digit(base, z);
    Integer k = (z.x0 - u) / base.b();
    return {z.x1 - base.a() * k, k};
}

struct AutomatonRun
{
    DigitWord prefix;
    ZBetaElem residue; // z / beta^n after removing the emitted digits
};

/// Runs n digit/shift steps from z; the residue satisfies
/// z = sum u_i beta^i + beta^n * residue, exactly in Z[beta].
inline AutomatonRun run_automaton(const PisotBase &base, ZBetaElem z, std::size_t n)
{
    AutomatonRun run;
    run.prefix.digits.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Integer u = digit(base, z);
        z = shift(base, z);
        run.prefix.push_back(std::move(u));
    }
    run.residue = std::move(z);
    return run;
}

/// Length-n prefix of the beta-adic expansion h(z).
inline DigitWord expand_prefix(const PisotBase &base, const ZBetaElem &z, std::size_t n)
{
    return run_automaton(base, z, n).prefix;
}

/// P_w(beta') evaluated exactly by Horner's scheme.
inline QuadElem eval_prefix(const PisotBase &base, const DigitWord &w)
{
    QuadElem v = base.rational(0);
    for (std::size_t i = w.size(); i-- > 0;) {
        v = v * base.beta_conj() + base.rational(Rational(w[i]));
    }
    return v;
}

/// P_w(beta) as an element of Z[beta] (Horner with the beta^2 = a*beta + b
/// reduction).
inline ZBetaElem eval_prefix_at_beta(const PisotBase &base, const DigitWord &w)
{
    ZBetaElem v(0, 0);
    for (std::size_t i = w.size(); i-- > 0;) {
        v = zb_mul_beta(base, v);
        v.x0 += w[i];
    }
    return v;
}

/**
 * CongruenceLadder: s_n is the least positive integer lying in
 * beta^n * Z[beta], r_n = s_n / s_{n-1}, and sigma_n = s_n / beta^n as an
 * element of Z[beta].  Integers congruent modulo s_n share their length-n
 * expansion prefix.
 */
struct CongruenceLadder
{
    std::vector<Integer> s;       // s[0] = 1
    std::vector<Integer> r;       // r[0] = 1 by convention
    std::vector<ZBetaElem> sigma; // sigma[n] = s[n] / beta^n

    std::size_t levels() const { return s.empty() ? 0 : s.size() - 1; }
};

/// Grows the ladder up to index N.  Membership of a candidate multiple in
/// beta^n Z[beta] is decided by the digit automaton itself: the length-n
/// prefix must be all zeros.
inline void extend_ladder(const PisotBase &base, CongruenceLadder &ladder, std::size_t N)
{
    if (ladder.s.empty()) {
        ladder.s.assign(1, Integer(1));
        ladder.r.assign(1, Integer(1));
        ladder.sigma.assign(1, ZBetaElem(1, 0));
    }
    Integer bpow = boost::multiprecision::pow(base.b(), static_cast<unsigned>(ladder.s.size() - 1));
    for (std::size_t n = ladder.s.size(); n <= N; ++n) {
        bpow *= base.b();
        const Integer &prev = ladder.s[n - 1];
        bool found = false;
        for (Integer k = 1; k * prev <= bpow; ++k) {
            Integer m = k * prev;
            AutomatonRun run = run_automaton(base, ZBetaElem(m, 0), n);
            if (run.prefix.all_zero()) {
                if (bpow % m != 0) {
                    throw std::logic_error("s_ladder: s_n does not divide b^n");
                }
                ladder.s.push_back(std::move(m));
                ladder.r.push_back(k);
                ladder.sigma.push_back(std::move(run.residue));
                found = true;
                break;
            }
        }
        if (!found) {
            // b^n itself lies in beta^n Z[beta]; reaching this point means
            // the automaton is broken.
            throw std::logic_error("s_ladder: no multiple of s_{n-1} up to b^n is in beta^n Z[beta]");
        }
    }
}

/// The ladder s_0, ..., s_N.
inline CongruenceLadder s_ladder(const PisotBase &base, std::size_t N)
{
    CongruenceLadder ladder;
    extend_ladder(base, ladder, N);
    return ladder;
}

} // namespace gammalgo
