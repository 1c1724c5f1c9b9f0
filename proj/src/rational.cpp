#include "latpress/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <stdexcept>

namespace latpress {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("not an exact rational: '" + std::string(text) +
                                "' (expected \"p/q\" or an integer)");
  Integer n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

long double log_one_minus(const Rational& ratio) {
  if (ratio >= 1) throw std::domain_error("log_one_minus: ratio >= 1");
  if (sgn(ratio) == 0) return 0.0L;
  mpfr_t t;
  mpfr_init2(t, 128);
  if (ratio * 2 <= 1) {
    Rational neg = -ratio;
    mpfr_set_q(t, neg.get_mpq_t(), MPFR_RNDN);
    mpfr_log1p(t, t, MPFR_RNDN);
  } else {
    Rational rest = 1 - ratio;
    mpfr_set_q(t, rest.get_mpq_t(), MPFR_RNDN);
    mpfr_log(t, t, MPFR_RNDN);
  }
  long double out = mpfr_get_ld(t, MPFR_RNDN);
  mpfr_clear(t);
  return out;
}

Rational pow(const Rational& base, unsigned long k) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), k);
  // base was canonical, so num^k / den^k already is.
  return out;
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace latpress
