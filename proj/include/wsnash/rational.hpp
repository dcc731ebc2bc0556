#ifndef WSNASH_RATIONAL_HPP
#define WSNASH_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wsnash {

/// Exact rational number. All equilibrium predicates in this library are
/// decided with exact arithmetic; doubles appear only in diagnostics.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::invalid_argument if den == 0.
Rational make_rational(long num, long den = 1);
Rational make_rational(const mpz_class& num, const mpz_class& den);

/// Parses "p", "-p/q" or a finite decimal such as "0.125" exactly.
/// Scientific notation is rejected. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Shortest-ish decimal approximation, 12 significant digits.
std::string to_decimal_string(const Rational& value);

double to_double(const Rational& value);

/// Smallest integer >= value.
mpz_class ceil_rational(const Rational& value);

} // namespace wsnash

#endif
