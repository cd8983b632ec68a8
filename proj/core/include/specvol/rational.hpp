#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace specvol {

using Integer = mpz_class;

// Always canonical: lowest terms, positive denominator.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den = 1);

// Accepts "p" or "p/q" with arbitrary-length decimal integers.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

Integer factorial(unsigned n);
// Zero outside 0 <= k <= n.
Integer binomial(long n, long k);
// n!! with (-1)!! = 0!! = 1.
Integer double_factorial(long n);
Rational pow(const Rational& base, long exponent);

}  // namespace specvol
