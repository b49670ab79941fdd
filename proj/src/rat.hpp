#pragma once

#include <gmpxx.h>

#include <string>

namespace m24 {

// Exact rational scalar.  mpq_class keeps every value canonical (lowest
// terms, positive denominator), which is the invariant we rely on
// throughout: denominators of coefficients are meaningful, e.g. in the
// integrality hypothesis of the product theorem.
using Rat = mpq_class;
using Int = mpz_class;

// Parses "p", "-p", or "p/q".  Throws std::invalid_argument on anything else.
Rat rat_from_string(const std::string& s);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& x);

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

// Throws std::domain_error unless x is an integer.
Int to_integer(const Rat& x);

Rat rat(long num, long den = 1);

long lcm_long(long a, long b);

}  // namespace m24
