#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace tdr {

using Rational = mpq_class;
using Integer = mpz_class;

/// Builds num/den in canonical form. Throws ParseError on a zero denominator.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p/q" or "p" (optional leading sign). Rejects q = 0 and anything else.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

}  // namespace tdr
