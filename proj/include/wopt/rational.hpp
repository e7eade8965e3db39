#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace wopt {

// Exact rational number in canonical form (gcd(|num|, den) = 1, den >= 1).
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Accepts "p", "p/q" and plain decimals such as "-1.25". Throws
// std::invalid_argument on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

Rational dot(const RationalVector& lhs, const RationalVector& rhs);

} // namespace wopt
