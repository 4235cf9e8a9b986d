#ifndef ARS_RATIONAL_HPP
#define ARS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ars {

/// Exact rational scalar. GMP keeps mpq values canonical (reduced, positive
/// denominator) after every arithmetic operation; values built from raw
/// parts go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p" or "p/q" with an optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

double to_double(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

} // namespace ars

#endif
