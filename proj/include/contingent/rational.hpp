#ifndef CONTINGENT_RATIONAL_HPP
#define CONTINGENT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace contingent {

/// Exact rational number. All likelihoods, payoffs and LP data use this type.
using Rational = mpq_class;

/// Parses "num/den" or an integer literal ("3", "-2"). Throws InputError on
/// malformed text or a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// num/den in canonical form; mpq_class(num, den) alone is not reduced.
Rational ratio(long num, long den);

/// Reduced text form: "3/4", "-1/2", "0", "2".
std::string to_string(const Rational& value);

/// Sum of a range of rationals.
Rational sum(const std::vector<Rational>& values);

}  // namespace contingent

#endif  // CONTINGENT_RATIONAL_HPP
