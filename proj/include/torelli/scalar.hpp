#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace torelli {

/// Exact rational, always kept in canonical form (reduced, positive denominator).
using Scalar = mpq_class;
using Integer = mpz_class;

Scalar make_scalar(long numerator, long denominator = 1);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Scalar& value);
std::string to_string(const Integer& value);

/// Accepts "p" or "p/q" with an optional leading sign. Throws std::invalid_argument.
Scalar parse_scalar(std::string_view text);

inline bool is_integer(const Scalar& value) { return value.get_den() == 1; }

}  // namespace torelli
