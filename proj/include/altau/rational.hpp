#ifndef ALTAU_RATIONAL_HPP
#define ALTAU_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace altau
{

// Arbitrary-precision rational. Arithmetic keeps it canonical (gcd 1, positive
// denominator); the two-argument constructor does not, so build fractions with fraction().
using Rational = mpq_class;

// num/den in canonical form; throws std::domain_error for den = 0.
Rational fraction(long num, long den);

// Accepts "num/den" or a bare integer, optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Always "num/den", e.g. "-3/1".
std::string to_fraction_string(const Rational &x);

// Shortest form: "3" for integers, "3/4" otherwise.
std::string to_display_string(const Rational &x);

// x^e for any integer e; throws std::domain_error for 0^e with e < 0.
Rational power(const Rational &x, int e);

inline bool is_zero(const Rational &x) { return sgn(x) == 0; }

} // namespace altau

#endif
