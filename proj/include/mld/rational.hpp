#ifndef MLD_RATIONAL_HPP
#define MLD_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace mld {

// Every scalar in the library is exact. Rational is GMP's canonical
// rational: lowest terms, positive denominator, no rounding anywhere.
using Integer = mpz_class;
using Rational = mpq_class;

// num/den with canonicalization. Throws InputError if den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// Wire format: "p" or "p/q" with q > 0. Throws InputError on anything else
// (whitespace, floats, q == 0, empty).
Rational parse_rational(std::string_view text);

// Renders "p" when integral, "p/q" otherwise.
std::string to_string(const Rational& value);

bool is_integral(const Rational& value);
Integer floor_int(const Rational& value);
Integer ceil_int(const Rational& value);

// value - floor(value), in [0, 1).
Rational fractional_part(const Rational& value);

std::vector<Rational> to_rational_vector(const std::vector<long>& v);

} // namespace mld

#endif
