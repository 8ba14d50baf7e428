#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace braidrep {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator as long as results come from its arithmetic
/// operators; constructors below canonicalize explicitly.
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p/q" or "p" (base 10, optional leading '-'). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace braidrep
