#pragma once

#include <gmpxx.h>

#include <string>

namespace slitplane {

// All coefficients are exact. GMP's canonical form is the type invariant:
// lowest terms, denominator > 0.
using Integer = mpz_class;
using Rational = mpq_class;

// Canonicalizing constructors (mpq_class(n, d) alone does not reduce).
Rational rat(long num, long den = 1);
Rational rat(const Integer& num, const Integer& den);

// binomial(n, k) for integer n >= 0: zero outside 0 <= k <= n.
Integer binomial(long n, long k);

// Generalized binomial with rational top, via the k-term falling factorial:
// top*(top-1)*...*(top-k+1) / k!. Zero for k < 0.
Rational binomial_rat(const Rational& top, long k);

Integer factorial(long n);

Integer pow_int(long base, unsigned long e);
Rational pow_rat(const Rational& base, unsigned long e);

bool is_integer(const Rational& q);

// "p" or "p/q".
std::string to_string(const Rational& q);

} // namespace slitplane
