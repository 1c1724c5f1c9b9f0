#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace latpress {

// Exact arithmetic backbone.  All partition-function work is done on
// GMP rationals; floating point enters only through the final logarithm.
using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p/q" or a plain integer literal (optionally negative).
// Anything else -- floats, empty strings, zero denominators -- is rejected
// with std::invalid_argument.  This is the only way values of the
// adsorption activity enter the library.
Rational parse_rational(std::string_view text);

// Canonical "p" or "p/q" rendering.
std::string to_string(const Rational& r);

// log(1 - ratio) for an exact ratio < 1, evaluated losslessly:
// the rational is fed to a 128-bit MPFR intermediate, with the branch
// log1p(-ratio) for ratio <= 1/2 and log(1 - ratio) computed on the exact
// difference otherwise.  Either way the returned long double carries the
// full 64-bit significand.
long double log_one_minus(const Rational& ratio);

// r^k for k >= 0.
Rational pow(const Rational& base, unsigned long k);

double to_double(const Rational& r);

}  // namespace latpress
