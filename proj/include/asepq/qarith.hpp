#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace asepq {

using Rational = mpq_class;

// Laurent polynomial in u = q^{1/2} with exact rational coefficients.
//
// Exponents are stored on the u-grid: the monomial q^k sits at u-exponent 2k
// and q^{1/2} at u-exponent 1. The half-integer grid exists because reversible
// measure weights carry factors q^{m^2/2}; everything else in the model lands
// on even u-exponents.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return constant(1); }
    static LaurentPoly constant(const Rational& c);
    // c * u^k  (i.e. c * q^{k/2})
    static LaurentPoly u_power(long k, const Rational& c = Rational(1));
    // c * q^k
    static LaurentPoly q_power(long k, const Rational& c = Rational(1));

    bool is_zero() const { return t_.empty(); }
    bool is_one() const;
    bool is_constant() const;

    // lowest/highest u-exponent; undefined on the zero polynomial
    long lowest() const;
    long highest() const;

    const std::map<long, Rational>& terms() const { return t_; }
    Rational coeff(long uexp) const;
    void set_coeff(long uexp, const Rational& c);
    void add_to_coeff(long uexp, const Rational& c);

    // every u-exponent even, i.e. the value is a Laurent polynomial in q itself
    bool integer_q_exponents() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;
    LaurentPoly pow(unsigned long e) const;

    bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Exact quotient, or nullopt when this is not divisible by d.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

    // Evaluate at q = q0 > 0 (u = sqrt(q0)).
    double eval(double q0) const;
    // Exact evaluation at rational q0 > 0; available only when all exponents
    // are integer powers of q.
    std::optional<Rational> eval_rational(const Rational& q0) const;

    // Canonical rendering: terms ascending in exponent, rational coefficients,
    // exponents printed as powers of q (parenthesized fractions for the
    // half-integer grid), e.g. "q^-2 + 1 + q^2" or "1/2*q^(1/2) - q^3".
    std::string str() const;
    // Parses the canonical rendering (and tolerates missing spaces around
    // +/- separators). Returns nullopt on malformed input.
    static std::optional<LaurentPoly> parse(const std::string& s);

private:
    std::map<long, Rational> t_;  // u-exponent -> nonzero coefficient
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

// Quotient of Laurent polynomials. Not reduced to lowest terms; equality is
// decided by cross-multiplication. Light normalization only: zero numerator
// collapses the denominator to 1, and a common power of u is stripped so
// printed forms stay small.
class RationalFunction {
public:
    RationalFunction() : num_(LaurentPoly::zero()), den_(LaurentPoly::one()) {}
    RationalFunction(const LaurentPoly& p) : num_(p), den_(LaurentPoly::one()) {}
    RationalFunction(const LaurentPoly& n, const LaurentPoly& d);

    static RationalFunction one() { return RationalFunction(LaurentPoly::one()); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }
    // The numerator when den == 1, otherwise the exact quotient if it happens
    // to be a polynomial, otherwise nullopt.
    std::optional<LaurentPoly> as_poly() const;

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    RationalFunction operator-() const;

    bool operator==(const RationalFunction& o) const;
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    double eval(double q0) const;
    std::optional<Rational> eval_rational(const Rational& q0) const;

    std::string str() const;

private:
    LaurentPoly num_, den_;
    void normalize();
};

RationalFunction operator+(RationalFunction a, const RationalFunction& b);
RationalFunction operator-(RationalFunction a, const RationalFunction& b);
RationalFunction operator*(RationalFunction a, const RationalFunction& b);
RationalFunction operator/(RationalFunction a, const RationalFunction& b);

// q-deformed integers, two flavours:
//   [n]   = (q^n - q^-n)/(q - q^-1) = q^{n-1} + q^{n-3} + ... + q^{-(n-1)}
//   {n}   = (1 - q^{2n})/(1 - q^2)  = 1 + q^2 + ... + q^{2(n-1)}
// linked by q^{n-1}·[n] = {n}. Both are zero at n = 0.
LaurentPoly q_int(long n);
LaurentPoly q_int2(long n);

// [n]! and {n}!, with [0]! = {0}! = 1.
LaurentPoly q_factorial(long n);
LaurentPoly q_factorial2(long n);

// [n]! / ([n-m]! [m]!), computed by verified exact division.
LaurentPoly q_binomial(long n, long m);

double eval_at(const LaurentPoly& p, double q0);
double eval_at(const RationalFunction& f, double q0);

}  // namespace asepq
