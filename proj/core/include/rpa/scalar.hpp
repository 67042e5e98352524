#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rpa {

// Exact rational scalar. GMP keeps results of arithmetic in lowest terms
// with a positive denominator.
using Scalar = mpq_class;

// Parses "p" or "p/q" (optional sign, decimal digits only). Throws
// std::invalid_argument on malformed text or a zero denominator.
Scalar parse_scalar(std::string_view text);

// Canonical text: "p" for integers, "p/q" otherwise, always reduced.
std::string format_scalar(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

}  // namespace rpa
