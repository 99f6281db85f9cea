#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace votetiming {

// Exact arbitrary-precision rational. Every probability, utility and
// threshold in this project is a Rational; values are only rounded for
// display, never for computation.
using Rational = mpq_class;

// num/den, reduced. (mpq_class(n, d) alone does not canonicalize.)
Rational frac(long num, long den = 1);

// Accepts integers, "a/b" fractions, and terminating decimals ("0.25",
// "-3.5"). Anything else -- including exponent notation -- is rejected,
// so no value ever round-trips through binary floating point.
std::optional<Rational> parse_rational(std::string_view text);

// Canonical exact form: "num" or "num/den".
std::string rational_str(const Rational& value);

// Fixed-point decimal with `digits` fractional digits, rounded half away
// from zero. Pure integer arithmetic.
std::string decimal_str(const Rational& value, int digits = 6);

bool in_unit_interval(const Rational& value);

}  // namespace votetiming
