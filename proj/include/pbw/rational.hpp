#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pbw {

// All coefficients in the library are exact rationals backed by GMP.
using Rational = mpq_class;

// Canonical "p/q" form; "p" alone when q == 1.
std::string to_string(const Rational& r);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

Rational factorial(unsigned n);

Rational binomial(unsigned n, unsigned k);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace pbw
