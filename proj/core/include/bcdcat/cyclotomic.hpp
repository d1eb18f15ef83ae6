#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "bcdcat/errors.hpp"

namespace bcdcat {

using Rational = mpq_class;
using Integer = mpz_class;

unsigned euler_phi(unsigned m);

/// The m-th cyclotomic polynomial as its integer coefficient vector,
/// lowest degree first, monic of degree phi(m).  Computed once per order by
/// dividing x^m - 1 by the cyclotomic polynomials of the proper divisors;
/// cached, safe for concurrent callers.
const std::vector<Integer>& cyclotomic_polynomial(unsigned m);

/// An exact element of the cyclotomic field Q(zeta_M).
///
/// The value is a polynomial in zeta_M with rational coefficients, reduced
/// modulo the M-th cyclotomic polynomial.  The coefficient vector always has
/// length phi(M), so the representation is canonical: two values are equal
/// iff their orders and coefficient vectors are equal.  All arithmetic is
/// exact; no floating point enters any decision path.  Values are immutable
/// after construction and safe to share across threads.
class CycNum {
public:
    /// Zero of Q (order 1).
    CycNum() : order_(1), coeffs_(1, Rational(0)) {}

    static CycNum zero(unsigned order);
    static CycNum one(unsigned order);
    static CycNum from_rational(unsigned order, const Rational& value);
    static CycNum from_integer(unsigned order, long value);
    /// zeta_order^exponent in canonical form; exponent may be negative.
    static CycNum root(unsigned order, long exponent);
    /// Construct from a coefficient vector of length phi(order) (already
    /// reduced) or length <= phi(order) (zero padded).
    static CycNum from_coeffs(unsigned order, std::vector<Rational> coeffs);

    unsigned order() const { return order_; }
    unsigned degree() const { return static_cast<unsigned>(coeffs_.size()); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    bool is_integer() const;
    /// Throws DomainError unless is_rational().
    Rational rational_value() const;
    /// Throws DomainError unless is_integer().
    Integer integer_value() const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& rhs);
    CycNum& operator-=(const CycNum& rhs);
    CycNum& operator*=(const CycNum& rhs);
    CycNum& operator/=(const CycNum& rhs);

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
    friend bool operator==(const CycNum& a, const CycNum& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    /// Multiplicative inverse.  Throws DivisionByZeroError on zero.
    CycNum inv() const;

    /// Display/debug embedding zeta_M -> exp(2*pi*i/M).  Never used in any
    /// equality or zero test.
    std::complex<double> approx() const;

    /// Human readable polynomial form, e.g. "1/2 - z^3" with z = zeta_M.
    std::string str() const;

private:
    CycNum(unsigned order, std::vector<Rational> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}

    unsigned order_;
    std::vector<Rational> coeffs_;
};

CycNum pow(const CycNum& base, long exponent);

/// The Galois automorphism zeta -> zeta^{-1} (complex conjugation under the
/// standard embedding).  Involutive ring automorphism fixing the rationals.
CycNum conj(const CycNum& a);

/// The Galois map zeta_M -> zeta_M^e for gcd(e, M) = 1.
CycNum galois(const CycNum& a, long e);

/// Canonical embedding Q(zeta_M) -> Q(zeta_N) for M | N, zeta_M -> zeta_N^{N/M}.
CycNum embed(const CycNum& a, unsigned new_order);

/// Inverse of embed: expresses a as an element of Q(zeta_M) for M | order(a).
/// Throws NotInSubfieldError if a does not lie in the subfield.
CycNum descend(const CycNum& a, unsigned new_order);

// Quantum integers.  All take the quantum parameter(s) explicitly.

/// [n] = (s^n - s^{-n}) / (s - s^{-1}); requires s^2 != 1.
CycNum qint(const CycNum& s, long n);

/// [n]_alpha = (alpha s^n - alpha^{-1} s^{-n}) / (s - s^{-1}).
CycNum qint_alpha(const CycNum& alpha, const CycNum& s, long n);

/// Unnormalized bracket [n]_s = s^n - s^{-n}.
CycNum bracket_s(const CycNum& s, long n);

/// [n]! = [1][2]...[n].
CycNum qfactorial(const CycNum& s, long n);

/// Exact multiplicative order of a, searching exponents dividing `bound`.
/// Returns 0 if no divisor of `bound` works (then the order does not divide
/// `bound`, or a is not a root of unity).
long multiplicative_order(const CycNum& a, long bound);

std::string rational_str(const Rational& r);

}  // namespace bcdcat
