#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace upos {

using Integer = mpz_class;
using Rational = mpq_class;

/// n/d in canonical form; d must be nonzero.
Rational ratio(const Integer& n, const Integer& d);

/// Parses "p" or "p/q" (optional leading sign, decimal digits only). The result
/// is canonical. Throws InvalidInput on anything else, including q = 0.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

int sign(const Rational& q);
int sign(const Integer& z);

/// floor(log2 |q|) for q != 0.
long ilog2(const Rational& q);

/// Largest dyadic r = m / 2^bits with r <= sqrt(q), q >= 0.
Rational sqrt_floor(const Rational& q, unsigned long bits);
/// Smallest dyadic r = m / 2^bits with r >= sqrt(q), q >= 0.
Rational sqrt_ceil(const Rational& q, unsigned long bits);

Rational pow(const Rational& q, unsigned long e);
/// floor(q)
Integer floor_div(const Rational& q);
Integer lcm(const Integer& a, const Integer& b);

/// The rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace upos
