#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace gammalgo {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rat_num(const Rational &r) { return numerator(r); }
inline Integer rat_den(const Rational &r) { return denominator(r); }

/// Floor division for integers (quotient rounded toward minus infinity).
inline Integer floor_div(const Integer &num, const Integer &den)
{
    if (den == 0) {
        throw std::domain_error("floor_div: zero divisor");
    }
    Integer q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0 && ((r < 0) != (den < 0))) {
        --q;
    }
    return q;
}

inline Integer rat_floor(const Rational &r)
{
    return floor_div(rat_num(r), rat_den(r));
}

inline Integer pow10(unsigned digits)
{
    return boost::multiprecision::pow(Integer(10), digits);
}

inline int int_sign(const Integer &x)
{
    return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

inline int rat_sign(const Rational &r)
{
    return int_sign(rat_num(r));
}

inline bool is_perfect_square(const Integer &n)
{
    if (n < 0) {
        return false;
    }
    Integer s = boost::multiprecision::sqrt(n);
    return s * s == n;
}

/**
 * QuadElem: an exact element p + q*sqrt(D) of the real quadratic field
 * Q(sqrt(D)), with rational p, q.  D must not be a perfect square, so the
 * pair (p, q) determines the value uniquely and equality is structural.
 * All comparisons reduce to exact integer arithmetic.
 */
class QuadElem
{
public:
    QuadElem() : p_(0), q_(0), d_(0) {}

    QuadElem(Rational p, Rational q, Integer d)
        : p_(std::move(p)), q_(std::move(q)), d_(std::move(d))
    {
        if (d_ <= 0) {
            throw std::invalid_argument("QuadElem: discriminant must be positive");
        }
    }

    static QuadElem from_rational(Rational r, Integer d)
    {
        return QuadElem(std::move(r), Rational(0), std::move(d));
    }

    const Rational &p() const noexcept { return p_; }
    const Rational &q() const noexcept { return q_; }
    const Integer &discriminant() const noexcept { return d_; }

    bool is_rational() const { return q_ == 0; }
    bool is_zero() const { return p_ == 0 && q_ == 0; }

    /// Galois conjugation: sqrt(D) -> -sqrt(D).
    QuadElem conj() const { return QuadElem(p_, -q_, d_); }

    QuadElem operator-() const { return QuadElem(-p_, -q_, d_); }

    QuadElem operator+(const QuadElem &o) const
    {
        check_same_field(o);
        return QuadElem(p_ + o.p_, q_ + o.q_, d_);
    }

    QuadElem operator-(const QuadElem &o) const
    {
        check_same_field(o);
        return QuadElem(p_ - o.p_, q_ - o.q_, d_);
    }

    QuadElem operator*(const QuadElem &o) const
    {
        check_same_field(o);
        return QuadElem(p_ * o.p_ + q_ * o.q_ * Rational(d_),
                        p_ * o.q_ + q_ * o.p_, d_);
    }

    QuadElem operator/(const QuadElem &o) const
    {
        check_same_field(o);
        if (o.is_zero()) {
            throw std::domain_error("QuadElem: division by zero");
        }
        // 1/(p+q*sqrt(D)) = (p-q*sqrt(D)) / (p^2 - q^2 D); the norm is
        // nonzero because D is never a perfect square.
        Rational norm = o.p_ * o.p_ - o.q_ * o.q_ * Rational(d_);
        QuadElem numer = *this * o.conj();
        return QuadElem(numer.p_ / norm, numer.q_ / norm, d_);
    }

    QuadElem operator+(const Rational &r) const { return QuadElem(p_ + r, q_, d_); }
    QuadElem operator-(const Rational &r) const { return QuadElem(p_ - r, q_, d_); }
    QuadElem operator*(const Rational &r) const { return QuadElem(p_ * r, q_ * r, d_); }

    bool operator==(const QuadElem &o) const
    {
        return p_ == o.p_ && q_ == o.q_ && d_ == o.d_;
    }
    bool operator!=(const QuadElem &o) const { return !(*this == o); }

    /// Exact sign of p + q*sqrt(D), decided by integer comparisons only.
    int sign() const
    {
        int sp = rat_sign(p_);
        int sq = rat_sign(q_);
        if (sq == 0) {
            return sp;
        }
        if (sp == 0) {
            return sq;
        }
        if (sp == sq) {
            return sp;
        }
        // Opposite signs: compare p^2 with q^2 D exactly.  Both sides are
        // nonnegative rationals; cross-multiply the integer parts.
        Integer lhs = rat_num(p_) * rat_num(p_) * rat_den(q_) * rat_den(q_);
        Integer rhs = rat_num(q_) * rat_num(q_) * rat_den(p_) * rat_den(p_) * d_;
        int c = lhs == rhs ? 0 : (lhs > rhs ? 1 : -1);
        // |p| dominates -> sign of p; |q*sqrt(D)| dominates -> sign of q.
        return c == 0 ? 0 : (c > 0 ? sp : sq);
    }

    bool operator<(const QuadElem &o) const { return (*this - o).sign() < 0; }
    bool operator<=(const QuadElem &o) const { return (*this - o).sign() <= 0; }
    bool operator>(const QuadElem &o) const { return (*this - o).sign() > 0; }
    bool operator>=(const QuadElem &o) const { return (*this - o).sign() >= 0; }

private:
    void check_same_field(const QuadElem &o) const
    {
        if (d_ != o.d_) {
            throw std::invalid_argument("QuadElem: mixed discriminants");
        }
    }

    Rational p_, q_;
    Integer d_;
};

inline int sign_of(const QuadElem &x) { return x.sign(); }

inline QuadElem abs_of(const QuadElem &x) { return x.sign() < 0 ? -x : x; }

/// Greatest integer n with n <= x, seeded by an integer-sqrt approximation
/// of the irrational part and certified by exact sign tests.
inline Integer floor_of(const QuadElem &x)
{
    if (x.is_rational()) {
        return rat_floor(x.p());
    }
    // Write x = (A + B*sqrt(D)) / m with integers A, B and m > 0.
    Integer pd = rat_den(x.p());
    Integer qd = rat_den(x.q());
    Integer g = boost::multiprecision::gcd(pd, qd);
    Integer m = pd / g * qd;
    Integer A = rat_num(x.p()) * (m / pd);
    Integer B = rat_num(x.q()) * (m / qd);
    Integer sq = B * B * x.discriminant();
    Integer t = boost::multiprecision::sqrt(sq);
    // B*sqrt(D) lies in [t, t+1) for B >= 0 and in (-t-1, -t] otherwise,
    // so the seed is off by at most one.
    Integer n = B >= 0 ? floor_div(A + t, m) : floor_div(A - t - 1, m);
    while (sign_of(x - QuadElem::from_rational(Rational(n + 1), x.discriminant())) >= 0) {
        ++n;
    }
    while (sign_of(x - QuadElem::from_rational(Rational(n), x.discriminant())) < 0) {
        --n;
    }
    return n;
}

/// Decimal rendering with exactly `digits` fractional digits, truncated
/// toward zero.  Every digit is certified by exact integer comparisons.
inline std::string to_decimal(const QuadElem &x, unsigned digits)
{
    if (digits < 1) {
        throw std::invalid_argument("to_decimal: digits must be >= 1");
    }
    int s = x.sign();
    Integer scale = pow10(digits);
    std::string frac_digits;
    Integer int_part = 0;
    if (s != 0) {
        QuadElem y = s < 0 ? -x : x;
        Integer m = floor_of(y * Rational(scale));
        int_part = m / scale;
        Integer frac = m % scale;
        frac_digits = frac.str();
    }
    std::string out;
    if (s < 0) {
        out += '-';
    }
    out += int_part.str();
    out += '.';
    out.append(digits - frac_digits.size(), '0');
    out += frac_digits;
    return out;
}

/**
 * PisotBase: the quadratic Pisot base defined by beta^2 = a*beta + b with
 * a >= b >= 1.  Carries the discriminant D = a^2 + 4b and the exact roots
 * beta = (a + sqrt(D))/2 > 1 and beta' = (a - sqrt(D))/2 in (-1, 0).
 */
class PisotBase
{
public:
    const Integer &a() const noexcept { return a_; }
    const Integer &b() const noexcept { return b_; }
    const Integer &discriminant() const noexcept { return d_; }
    const QuadElem &beta() const noexcept { return beta_; }
    const QuadElem &beta_conj() const noexcept { return conj_; }

    /// |beta'| as an exact field element.
    QuadElem abs_conj() const { return -conj_; }

    QuadElem rational(Rational r) const
    {
        return QuadElem::from_rational(std::move(r), d_);
    }

    QuadElem integer(Integer n) const { return rational(Rational(std::move(n))); }

    friend PisotBase make_base(const Integer &a, const Integer &b);

private:
    PisotBase(Integer a, Integer b, Integer d)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)),
          beta_(Rational(a_, 2), Rational(1, 2), d_),
          conj_(Rational(a_, 2), Rational(-1, 2), d_)
    {
    }

    Integer a_, b_, d_;
    QuadElem beta_, conj_;
};

/// Validates and builds the base for beta^2 = a*beta + b.
inline PisotBase make_base(const Integer &a, const Integer &b)
{
    if (b < 1) {
        throw std::invalid_argument("make_base: require b >= 1");
    }
    if (a < b) {
        throw std::invalid_argument("make_base: require a >= b >= 1");
    }
    Integer d = a * a + 4 * b;
    if (is_perfect_square(d)) {
        throw std::invalid_argument("make_base: a^2 + 4b is a perfect square, beta is rational");
    }
    PisotBase base(a, b, d);
    // Establish the arithmetic invariants once, exactly.
    const QuadElem &beta = base.beta();
    const QuadElem &conj = base.beta_conj();
    if (!(sign_of(beta - base.rational(1)) > 0 && sign_of(conj) < 0 &&
          sign_of(conj + base.rational(1)) > 0 &&
          beta * conj == base.integer(-b) && beta + conj == base.integer(a))) {
        throw std::logic_error("make_base: root invariants failed");
    }
    return base;
}

} // namespace gammalgo
