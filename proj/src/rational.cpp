#include "votetiming/rational.hpp"

#include <cctype>

namespace votetiming {

Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;

  std::string num_digits;
  std::string den_digits;
  auto slash = text.find('/');
  auto dot = text.find('.');
  if (slash != std::string_view::npos) {
    if (dot != std::string_view::npos) return std::nullopt;
    std::string_view n = text.substr(0, slash);
    std::string_view d = text.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) return std::nullopt;
    mpz_class den(std::string(d), 10);
    if (den == 0) return std::nullopt;
    Rational r(mpz_class(std::string(n), 10), den);
    r.canonicalize();
    if (negative) r = -r;
    return r;
  }
  if (dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view fracpart = text.substr(dot + 1);
    if (whole.empty() && fracpart.empty()) return std::nullopt;
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    if (!fracpart.empty() && !all_digits(fracpart)) return std::nullopt;
    mpz_class scale = 1;
    for (size_t i = 0; i < fracpart.size(); ++i) scale *= 10;
    mpz_class w = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole), 10);
    mpz_class f = fracpart.empty() ? mpz_class(0) : mpz_class(std::string(fracpart), 10);
    Rational r(w * scale + f, scale);
    r.canonicalize();
    if (negative) r = -r;
    return r;
  }
  if (!all_digits(text)) return std::nullopt;
  Rational r(mpz_class(std::string(text), 10));
  if (negative) r = -r;
  return r;
}

std::string rational_str(const Rational& value) { return value.get_str(); }

std::string decimal_str(const Rational& value, int digits) {
  if (digits < 0) digits = 0;
  mpz_class num = value.get_num();
  mpz_class den = value.get_den();
  bool negative = num < 0;
  if (negative) num = -num;

  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;

  // round(|value| * scale), half away from zero
  mpz_class scaled_num = num * scale;
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled_num.get_mpz_t(), den.get_mpz_t());
  if (2 * r >= den) q += 1;

  mpz_class whole = q / scale;
  mpz_class fracpart = q % scale;

  std::string out;
  if (negative && (whole != 0 || fracpart != 0)) out += '-';
  out += whole.get_str();
  if (digits > 0) {
    std::string f = fracpart.get_str();
    out += '.';
    out += std::string(static_cast<size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

bool in_unit_interval(const Rational& value) { return value >= 0 && value <= 1; }

}  // namespace votetiming
