#pragma once

#include <gmpxx.h>

#include <string>

namespace bihom {

// All arithmetic in the library is exact.  mpq_class keeps every value in
// lowest terms with a positive denominator, which is also the canonical
// serialized form.
using Rational = mpq_class;

// Parses "p" or "p/q" with integer p and positive integer q.
// Throws std::invalid_argument on anything else ("1.5", "3/0", "x", ...).
Rational parse_rational(const std::string& text);

// Canonical form: "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& x);

}  // namespace bihom
