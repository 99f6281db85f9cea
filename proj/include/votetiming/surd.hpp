#pragma once

#include "votetiming/rational.hpp"

namespace votetiming {

// Exact comparisons against quadratic irrationals. The regime boundaries all
// have the form (a + s*sqrt(d))/b with rational a, b, d, so membership can be
// decided by comparing squares -- no rounding, no tolerance.

// sign of (t - s*sqrt(d)), with d >= 0 and s in {-1, +1}.
int cmp_with_sqrt(const Rational& t, int s, const Rational& d);

// sign of (x - (a + s*sqrt(d))/b), with b != 0.
int cmp_vs_surd(const Rational& x, const Rational& a, int s, const Rational& d,
                const Rational& b);

}  // namespace votetiming
