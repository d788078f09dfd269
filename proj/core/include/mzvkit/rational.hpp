#pragma once

#include <gmpxx.h>

#include <string>

#include "mzvkit/errors.hpp"

namespace mzv {

// Exact arbitrary-precision rational arithmetic.  mpq_class keeps values
// canonical (lowest terms, positive denominator) after every operation we
// perform through its operators; the helpers below cover construction from
// text and the two renderings the reports need.
using Rational = mpq_class;
using Integer = mpz_class;

// Parse "p", "-p", or "p/q" with arbitrary-precision parts.  q must be
// nonzero.  Throws parse_error on malformed text.
Rational rational_from_string(const std::string& text);

// Canonical exact rendering "p/q" (or "p" when q == 1).
std::string rational_to_string(const Rational& r);

// Decimal rendering with the given number of fractional digits, for human
// annotation only — verdicts never look at this.
std::string rational_to_decimal(const Rational& r, int digits = 12);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

Rational rational_abs(const Rational& r);

} // namespace mzv
