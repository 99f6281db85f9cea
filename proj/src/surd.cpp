#include "votetiming/surd.hpp"

#include <stdexcept>

namespace votetiming {

int cmp_with_sqrt(const Rational& t, int s, const Rational& d) {
  if (d < 0) throw std::invalid_argument("cmp_with_sqrt: negative radicand");
  int st = sgn(t);
  if (s > 0) {
    // t vs +sqrt(d)
    if (st < 0) return -1;
    if (st == 0) return d == 0 ? 0 : -1;
    Rational t2 = t * t;
    return cmp(t2, d);
  }
  // t vs -sqrt(d)
  if (st > 0) return 1;
  if (st == 0) return d == 0 ? 0 : 1;
  Rational t2 = t * t;
  return cmp(d, t2);
}

int cmp_vs_surd(const Rational& x, const Rational& a, int s, const Rational& d,
                const Rational& b) {
  int sb = sgn(b);
  if (sb == 0) throw std::invalid_argument("cmp_vs_surd: zero denominator");
  Rational t = b * x - a;
  int c = cmp_with_sqrt(t, s, d);
  return sb > 0 ? c : -c;
}

}  // namespace votetiming
