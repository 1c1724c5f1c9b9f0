#include "latpress/exact.hpp"

#include <stdexcept>
#include <string>

namespace latpress {

const char* to_string(ModelKind m) {
  switch (m) {
    case ModelKind::DirectedPath: return "directed";
    case ModelKind::DyckPath: return "dyck";
    case ModelKind::StaircasePolygon: return "staircase";
  }
  return "?";
}

ModelKind parse_model(std::string_view name) {
  if (name == "directed") return ModelKind::DirectedPath;
  if (name == "dyck") return ModelKind::DyckPath;
  if (name == "staircase") return ModelKind::StaircasePolygon;
  throw std::invalid_argument("unknown model '" + std::string(name) +
                              "' (directed|dyck|staircase)");
}

}  // namespace latpress

namespace latpress::exact {

namespace {

void require_activity(const Rational& z) {
  if (z <= 0) throw std::domain_error("activity z must be positive");
}

Integer int_pow(const Integer& base, unsigned long k) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), k);
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

// C(N, i) for i = 0..N.
std::vector<Integer> binomial_row(unsigned long N) {
  std::vector<Integer> row(N + 1);
  row[0] = 1;
  for (unsigned long i = 1; i <= N; ++i) {
    row[i] = row[i - 1] * static_cast<unsigned long>(N - i + 1);
    mpz_divexact_ui(row[i].get_mpz_t(), row[i].get_mpz_t(), i);
  }
  return row;
}

// w[t] = dz^t * r^{T-t}.  Summing terms weighted by w puts every power of
// (z-1) = dz/r over the single denominator r^T.
std::vector<Integer> scaled_powers(const Integer& dz, const Integer& r, unsigned T) {
  std::vector<Integer> w(T + 1);
  w[0] = int_pow(r, T);
  for (unsigned t = 1; t <= T; ++t) {
    if (w[t - 1] == 0) continue;  // dz == 0 (z = 1)
    w[t] = w[t - 1] * dz;
    mpz_divexact(w[t].get_mpz_t(), w[t].get_mpz_t(), r.get_mpz_t());
  }
  return w;
}

// Numerator of C_n(z;j): the (m1, m2) double sum with the quartic kernel,
// every term carried over the common denominator
// (2n+1)(2n+2)(2n+3)^2 * r^T (weights aligned to exponent T >= n + j).
Integer stair_double_sum(unsigned n, unsigned j, const std::vector<Integer>& brow,
                         const std::vector<Integer>& w) {
  Integer acc = 0, term;
  const unsigned long top = 2UL * n + 3;
  for (unsigned m1 = 0; m1 <= n; ++m1) {
    const unsigned long i2 = n + m1 + j + 3UL;
    if (i2 > top) break;
    const Integer& b2 = brow[i2];
    for (unsigned m2 = 0; m2 <= j; ++m2) {
      const unsigned long i1 = n + m2 + 2UL;
      const unsigned long k1 = (2UL * m2 + 1) * (2UL * m1 + 2UL * j + 3);
      const unsigned long k2 =
          (m1 + m2 + j + 2UL) * (m1 - static_cast<unsigned long>(m2) + j + 1);
      term = brow[i1] * b2;
      term *= k1;
      term *= k2;
      term *= w[m1 + m2];
      acc += term;
    }
  }
  return acc;
}

Rational make_canonical(const Integer& num, const Integer& den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace

Integer binom(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return Integer(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
  return out;
}

Integer catalan(unsigned long s) {
  Integer out = binom(2 * s, static_cast<long>(s));
  mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), s + 1);
  return out;
}

Rational partition_directed(unsigned n, const Rational& z) {
  require_activity(z);
  const Integer& r = z.get_den();
  const Integer dz = z.get_num() - r;
  const unsigned M = n / 2;
  const auto w = scaled_powers(dz, r, M);
  Integer acc = 0, b;
  const unsigned long up = (n + 1) / 2;
  for (unsigned m = 0; m <= M; ++m) {
    mpz_bin_uiui(b.get_mpz_t(), n, up + m);
    acc += b * w[m];
  }
  return make_canonical(acc, int_pow(r, M));
}

Rational partition_dyck(unsigned n, const Rational& z) {
  require_activity(z);
  if (n == 0) return Rational(1);
  if (n % 2) return Rational(0);
  const Integer& r = z.get_den();
  const Integer dz = z.get_num() - r;
  const unsigned M = n / 2;
  const auto w = scaled_powers(dz, r, M);
  Integer acc = 0, c;
  for (unsigned m = 0; m <= M; ++m) {
    // (4m+2)/(n+2m+2) C(n, n/2+m) is the integer count of Dyck paths of
    // n steps with m adsorption excess; the division is exact.
    mpz_bin_uiui(c.get_mpz_t(), n, M + m);
    c *= 4UL * m + 2;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), n + 2UL * m + 2);
    acc += c * w[m];
  }
  return make_canonical(acc, int_pow(r, M));
}

Rational partition_staircase(unsigned n, unsigned j, const Rational& z) {
  require_activity(z);
  if (j > n) throw std::domain_error("endpoint separation j exceeds half-length n");
  const Integer& r = z.get_den();
  const Integer dz = z.get_num() - r;
  const unsigned T = n + j;
  const auto brow = binomial_row(2UL * n + 3);
  const auto w = scaled_powers(dz, r, T);
  Integer den = Integer(2 * n + 1) * (2 * n + 2) * (2 * n + 3) * (2 * n + 3);
  den *= int_pow(r, T);
  return make_canonical(stair_double_sum(n, j, brow, w), den);
}

std::vector<Rational> staircase_row(unsigned half, unsigned jmax, const Rational& z) {
  require_activity(z);
  const unsigned n = half;
  const Integer& r = z.get_den();
  const Integer dz = z.get_num() - r;
  const unsigned T = n + jmax;
  const auto brow = binomial_row(2UL * n + 3);
  const auto w = scaled_powers(dz, r, T);
  Integer den = Integer(2 * n + 1) * (2 * n + 2) * (2 * n + 3) * (2 * n + 3);
  den *= int_pow(r, T);
  std::vector<Rational> out;
  out.reserve(jmax + 1);
  for (unsigned j = 0; j <= jmax; ++j)
    out.push_back(make_canonical(stair_double_sum(n, j, brow, w), den));
  return out;
}

Rational partition_staircase_alt(unsigned n, unsigned j, const Rational& z) {
  require_activity(z);
  if (j > n) throw std::domain_error("endpoint separation j exceeds half-length n");
  const Integer& r = z.get_den();
  const Integer dz = z.get_num() - r;
  const auto brow = binomial_row(2UL * n + 2);
  const auto w = scaled_powers(dz, r, n);
  const unsigned long top = 2UL * n + 2;

  Integer s1 = 0, term;
  for (unsigned k = 0; k <= n; ++k) {
    const unsigned long i = n + j + k + 3UL;
    if (i > top) break;
    term = brow[i] * static_cast<unsigned long>(j + k + 2);
    term *= w[k];
    s1 += term;
  }
  s1 *= binom(2UL * n, static_cast<long>(n));

  Integer s2 = 0;
  const Integer& bj = brow[n + j + 2];
  for (unsigned k = 0; k <= n; ++k) {
    // (n - 2j(k+1) - 2k - 1) changes sign across the sum.
    Integer coef = Integer(j + k + 2) *
                   (Integer(static_cast<long>(n)) - Integer(2UL * j) * (k + 1) -
                    Integer(2UL * k + 1));
    term = brow[n + k + 2] * coef;
    term *= w[k];
    s2 += term;
  }
  s2 *= bj;

  // s1/((n+1)^2 r^n) - s2/(2 (n+1)^2 (2n+1) r^n)
  Integer num = Integer(2) * (2 * n + 1) * s1 - s2;
  Integer den = Integer(2) * (n + 1) * (n + 1) * (2 * n + 1);
  den *= int_pow(r, n);
  return make_canonical(num, den);
}

Rational passthrough_staircase(unsigned n, unsigned q, const Rational& z) {
  require_activity(z);
  if (q == 0 || q >= n)
    throw std::domain_error("pass-through vertex must be interior: 0 < q < n");
  const unsigned jmax = std::min(q, n - q);
  const auto left = staircase_row(q, jmax, z);
  const auto right = (n - q == q) ? left : staircase_row(n - q, jmax, z);
  Rational total = 0;
  for (unsigned j = 0; j <= jmax; ++j) total += left[j] * right[j];
  return total;
}

ExactPressure pressure(const PressureQuery& query) {
  require_activity(query.z);
  if (query.n == 0) throw std::domain_error("size parameter n must be positive");
  if (query.q == 0 || query.q >= query.n)
    throw std::domain_error("pressure is defined at interior wall vertices only");
  Rational ratio;
  switch (query.model) {
    case ModelKind::DirectedPath:
      ratio = partition_dyck(query.q, query.z) *
              partition_directed(query.n - query.q, query.z) /
              partition_directed(query.n, query.z);
      break;
    case ModelKind::DyckPath: {
      if (query.n % 2)
        throw std::domain_error("Dyck pressure requires an even number of steps");
      ratio = partition_dyck(query.q, query.z) *
              partition_dyck(query.n - query.q, query.z) /
              partition_dyck(query.n, query.z);
      break;
    }
    case ModelKind::StaircasePolygon:
      ratio = passthrough_staircase(query.n, query.q, query.z) /
              partition_staircase(query.n, 0, query.z);
      break;
  }
  if (ratio < 0 || ratio >= 1)
    throw DegenerateRatio("excluded fraction outside [0,1): " + to_string(ratio));
  return {ratio, log_one_minus(ratio)};
}

namespace {

// value = r * sqrt(pi)^pi_pow.  Every z = 2 closed form assembles Gamma
// factors at integer and half-integer arguments; the sqrt(pi) powers must
// cancel before the result can be returned as a rational.
struct GammaHalf {
  Rational r;
  int pi_pow = 0;
};

GammaHalf gamma_of_half(unsigned long twice) {
  if (twice == 0) throw std::domain_error("Gamma pole");
  if (twice % 2 == 0) return {Rational(factorial(twice / 2 - 1)), 0};
  const unsigned long k = twice / 2;  // Gamma(k + 1/2) = (2k)!/(4^k k!) sqrt(pi)
  Rational v(factorial(2 * k), factorial(k) * int_pow(Integer(4), k));
  v.canonicalize();
  return {v, 1};
}

GammaHalf mul(GammaHalf a, const GammaHalf& b) {
  a.r *= b.r;
  a.pi_pow += b.pi_pow;
  return a;
}

GammaHalf div(GammaHalf a, const GammaHalf& b) {
  a.r /= b.r;
  a.pi_pow -= b.pi_pow;
  return a;
}

Rational settle(const GammaHalf& g, const char* what) {
  if (g.pi_pow != 0)
    throw std::domain_error(std::string(what) +
                            ": sqrt(pi) factors do not cancel (odd size?)");
  return g.r;
}

Rational pow2(long e) {
  if (e >= 0) return Rational(int_pow(Integer(2), static_cast<unsigned long>(e)));
  return Rational(Integer(1), int_pow(Integer(2), static_cast<unsigned long>(-e)));
}

}  // namespace

Rational closed_form_z2(Z2Form form, unsigned n, unsigned jq) {
  switch (form) {
    case Z2Form::DirectedTotal: {
      // 2^{n-1} (Gamma((n+1)/2) / (sqrt(pi) Gamma((n+2)/2)) + 1)
      GammaHalf frac = div(gamma_of_half(n + 1), gamma_of_half(n + 2));
      frac.pi_pow -= 1;
      return pow2(static_cast<long>(n) - 1) * (settle(frac, "T_n(2)") + 1);
    }
    case Z2Form::DyckTotal: {
      if (n % 2) throw std::domain_error("D_n(2): n must be even");
      Rational v(factorial(n), factorial(n / 2) * factorial(n / 2));
      v.canonicalize();
      return v;
    }
    case Z2Form::StaircaseGround: {
      Integer c = catalan(n);
      Rational v(Integer(2) * (2 * n + 1) * c * c, Integer(n + 2));
      v.canonicalize();
      return v;
    }
    case Z2Form::StaircaseAtJ: {
      const unsigned j = jq;
      if (j > n) throw std::domain_error("C_n(2;j): j exceeds n");
      Rational v(Integer(2) * (2 * n + 1) * (j + 1) * (j + 1) * catalan(n) *
                     binom(2UL * n, static_cast<long>(n + j)),
                 Integer(n + j + 1) * (n + j + 2));
      v.canonicalize();
      return v;
    }
    case Z2Form::StaircaseJSum: {
      // Gamma(n + 1/2) 16^n / (sqrt(pi) Gamma(n + 2))
      GammaHalf g = div(gamma_of_half(2 * n + 1), gamma_of_half(2 * n + 4));
      g.pi_pow -= 1;
      g.r *= Rational(int_pow(Integer(16), n));
      return settle(g, "sum_j C_n(2;j)");
    }
    case Z2Form::PassthroughTotal: {
      const unsigned q = jq;
      if (q == 0 || q >= n) throw std::domain_error("Z*_n(2;q): q must be interior");
      GammaHalf g = gamma_of_half(2 * n + 1);                        // Gamma(n+1/2)
      g = mul(g, gamma_of_half(2 * q + 1));                          // Gamma(q+1/2)
      g = mul(g, gamma_of_half(2 * (n - q) + 1));                    // Gamma(n-q+1/2)
      g = div(g, gamma_of_half(2 * (q + 2)));                        // Gamma(q+2)
      g = div(g, gamma_of_half(2 * (n + 3)));                        // Gamma(n+3)
      g = div(g, gamma_of_half(2 * (n - q + 2)));                    // Gamma(n-q+2)
      g.pi_pow -= 3;
      Integer head = Integer(2) * (Integer(n) * (3 * q + 2) - Integer(3) * q * q + 1);
      g.r *= Rational(head * int_pow(Integer(16), n));
      return settle(g, "Z*_n(2;q)");
    }
    case Z2Form::AvoidingRatio: {
      const unsigned q = jq;
      if (q == 0 || q >= n) throw std::domain_error("ratio at z=2: q must be interior");
      GammaHalf g = gamma_of_half(2 * q + 1);                        // Gamma(q+1/2)
      g = mul(g, gamma_of_half(2 * (n - q) + 1));                    // Gamma(n-q+1/2)
      g = mul(g, gamma_of_half(2 * (n + 2)));                        // Gamma(n+2)
      g = div(g, gamma_of_half(2 * (q + 2)));                        // Gamma(q+2)
      g = div(g, gamma_of_half(2 * (n - q + 2)));                    // Gamma(n-q+2)
      g = div(g, gamma_of_half(2 * n + 3));                          // Gamma(n+3/2)
      g.pi_pow -= 1;
      Integer head = Integer(n) * (3 * q + 2) - Integer(3) * q * q + 1;
      g.r *= Rational(head, Integer(2));
      g.r.canonicalize();
      return settle(g, "Z*_n(2;q)/C_n(2;0)");
    }
  }
  throw std::invalid_argument("unknown z=2 selector");
}

Rational closed_form_z2(Z2Form form, unsigned n) {
  switch (form) {
    case Z2Form::StaircaseAtJ:
    case Z2Form::PassthroughTotal:
    case Z2Form::AvoidingRatio:
      throw std::invalid_argument("selector requires a j/q argument");
    default:
      return closed_form_z2(form, n, 0);
  }
}

Integer pure_count(unsigned n, PureKind kind) {
  if (kind == PureKind::Positive) return binom(n, static_cast<long>((n + 1) / 2));
  if (n % 2) throw std::domain_error("Dyck counts exist for even lengths only");
  return catalan(n / 2);
}

}  // namespace latpress::exact
