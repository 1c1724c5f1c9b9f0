#include "latpress/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace latpress::asym {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void require_activity(const Rational& z) {
  if (z <= 0) throw std::domain_error("activity z must be positive");
}

void require_interior(double a) {
  if (!(a > 0.0 && a < 1.0)) throw std::domain_error("a must lie in (0,1)");
}

double checked_log(double arg, const char* what) {
  if (!(arg > 0.0))
    throw OutOfRegimeValidity(std::string(what) +
                              ": approximation outside its validity range");
  return std::log(arg);
}

// Corrected supercritical partition approximations, sans the common
// (z/sqrt(z-1))^m growth factor which cancels in every pressure ratio.
double directed_head(double m, double z) {
  return (z * z + 4.0 * (3.0 * m - 1.0) * z - 4.0 * (3.0 * m - 1.0)) /
         (12.0 * m * (z - 1.0));
}

double dyck_head(double m, double z) {
  return (z * z * z * z + 4.0 * (3.0 * m - 2.0) * z * z * z -
          30.0 * (2.0 * m - 1.0) * z * z + 16.0 * (2.0 * z - 1.0) * (3.0 * m - 1.0)) /
         (12.0 * m * (z - 1.0) * (z - 1.0) * (z - 2.0));
}

}  // namespace

Regime regime(const Rational& z) {
  require_activity(z);
  const int c = cmp(z, 2);
  if (c < 0) return Regime::Subcritical;
  if (c == 0) return Regime::Critical;
  return Regime::Supercritical;
}

double free_energy_dyck(const Rational& z) {
  if (regime(z) != Regime::Supercritical) return std::log(2.0);
  const double zd = to_double(z);
  return std::log(zd) - 0.5 * std::log(zd - 1.0);
}

double visit_density(const Rational& z) {
  if (regime(z) != Regime::Supercritical) return 0.0;
  const double zd = to_double(z);
  return (zd - 2.0) / (2.0 * (zd - 1.0));
}

SaddleLocations saddle_locations(const Rational& z) {
  require_activity(z);
  const double zd = to_double(z);
  const double delta = std::max((zd - 2.0) / (2.0 * zd), 0.0);
  // alpha_m reported at endpoint-separation delta = 0.
  const double alpha = std::max((zd - 2.0) / zd, 0.0);
  return {delta, alpha, alpha};
}

double limiting_pressure(const Rational& z) {
  if (regime(z) != Regime::Supercritical) return 0.0;
  return -std::log(to_double(z) - 1.0);
}

double rescaled_residual(ModelKind model, double a) {
  require_interior(a);
  const double a3 = a * a * a, b = 1.0 - a;
  switch (model) {
    case ModelKind::DyckPath:
      return -1.0 / std::sqrt(kPi * a3 * b * b * b);
    case ModelKind::DirectedPath:
      return -1.0 / std::sqrt(kPi * a3 * b);
    default:
      throw std::domain_error("rescaled residual pressure exists for path models only");
  }
}

AsymptoticPressure asym_pressure(ModelKind model, unsigned n, const Rational& z,
                                 double a, Variant variant) {
  require_activity(z);
  require_interior(a);
  if (n == 0) throw std::domain_error("size parameter n must be positive");
  const Regime rg = regime(z);
  const char* tag = rg == Regime::Subcritical ? "n^-3/2"
                    : rg == Regime::Critical  ? "n^-1/2"
                                              : "n^-1";
  const double zd = to_double(z);
  const double nd = static_cast<double>(n);
  const double b = 1.0 - a;
  double value = 0.0;

  if (model == ModelKind::StaircasePolygon) {
    switch (rg) {
      case Regime::Subcritical: {
        const double red = 5.0 * zd /
                           (2.0 * std::pow(nd, 1.5) * std::sqrt(kPi * a * a * a * b * b * b) *
                            (2.0 - zd) * (2.0 - zd));
        value = variant == Variant::LogForm ? checked_log(1.0 - red, "staircase z<2") : -red;
        break;
      }
      case Regime::Critical: {
        const double red = 3.0 / (2.0 * std::sqrt(kPi * nd * a * b));
        value = variant == Variant::LogForm ? checked_log(1.0 - red, "staircase z=2") : -red;
        break;
      }
      case Regime::Supercritical: {
        const double corr2 = 1.0 + 9.0 * zd / (8.0 * nd * (zd - 2.0) * (zd - 2.0));
        const double tail =
            3.0 * zd * zd /
            (2.0 * std::sqrt(kPi * nd * nd * nd * a * a * a * b * b * b));
        if (variant == Variant::LogForm) {
          const double t2 = 0.375 * (4.0 * zd * zd - 29.0 * zd + 64.0) /
                            (nd * (zd - 1.0) * (zd - 2.0)) * corr2;
          const double t3 =
              tail / ((zd - 2.0) * std::pow(zd - 1.0, 3.0) * std::log(zd - 1.0));
          value = checked_log(1.0 / (zd - 1.0) - t2 - t3, "staircase z>2");
        } else {
          const double t2 = 3.0 * (4.0 * zd * zd - 29.0 * zd + 16.0) /
                            (8.0 * nd * (zd - 2.0)) * corr2;
          const double t3 = tail / ((zd - 1.0) * (zd - 1.0) * (zd - 2.0) *
                                    std::abs(std::log(zd - 1.0)));
          value = -std::log(zd - 1.0) - t2 - t3;
        }
        break;
      }
    }
    return {value, rg, tag};
  }

  const bool dyck = model == ModelKind::DyckPath;
  switch (rg) {
    case Regime::Subcritical: {
      if (z == 1) {
        // Pure-entropy profile of a path of n steps (half-length n/2); the
        // generic subcritical form degenerates here.
        const double m = nd / 2.0;
        const double denom = dyck ? kPi * m * m * m * a * a * a * b * b * b
                                  : kPi * m * m * m * a * a * a * b;
        value = -1.0 / std::sqrt(denom);
        break;
      }
      if (zd < 1.0)
        throw OutOfRegimeValidity("subcritical path approximations hold for 1 <= z < 2");
      double l2 = std::log(zd - 1.0);
      l2 *= l2;
      const double spread = dyck ? a * a * a * b * b * b : a * a * a * b;
      const double red = 8.0 / (std::sqrt(2.0 * kPi * nd * nd * nd * spread) * l2);
      value = variant == Variant::LogForm ? checked_log(1.0 - red, "path z<2") : -red;
      break;
    }
    case Regime::Critical: {
      if (variant == Variant::LogForm) {
        double arg;
        if (dyck) {
          arg = 1.0 - 2.0 / std::sqrt(2.0 * kPi * nd * a * b);
        } else {
          arg = 1.0 - 2.0 / std::sqrt(2.0 * kPi * nd * a) +
                2.0 * (1.0 - a - std::sqrt(b)) / (kPi * nd * std::sqrt(a) * b);
        }
        value = checked_log(arg, "path z=2");
      } else {
        value = dyck ? -std::sqrt(2.0) / std::sqrt(kPi * nd * a * b)
                     : -std::sqrt(2.0) / std::sqrt(kPi * nd * a);
      }
      break;
    }
    case Regime::Supercritical: {
      if (variant == Variant::LogForm) {
        // Corrected partition approximations substituted into the exact
        // log-ratio at the realized wall vertex q = 2 floor(a n / 2).
        const long q = 2 * static_cast<long>(std::floor(a * nd / 2.0));
        if (q <= 0 || q >= static_cast<long>(n))
          throw OutOfRegimeValidity("wall vertex maps to an endpoint");
        const double qm = static_cast<double>(q);
        const double ratio =
            dyck ? dyck_head(qm, zd) * dyck_head(nd - qm, zd) / dyck_head(nd, zd)
                 : dyck_head(qm, zd) * directed_head(nd - qm, zd) / directed_head(nd, zd);
        value = checked_log(1.0 - ratio, "path z>2");
      } else {
        const double poly =
            zd * zd * zd * zd + 8.0 * zd * zd * zd + 30.0 * zd * zd - 32.0 * zd + 16.0;
        double A = (a * a - a + 1.0) * poly;
        if (!dyck) A -= 6.0 * a * a * zd * zd;
        value = -std::log(zd - 1.0) -
                A / (12.0 * nd * a * b * (zd - 1.0) * (zd - 2.0));
      }
      break;
    }
  }
  return {value, rg, tag};
}

DyckBounds dyck_bounds(unsigned n, const Rational& z) {
  if (!(z > 2)) throw std::domain_error("sandwich bounds require z > 2");
  const Rational zm1 = z - 1, zm2 = z - 2;
  const Rational lower = zm2 / zm1 * latpress::pow(z * z / zm1, n);
  const Rational rest =
      z * zm1 / latpress::pow(zm2, 3) * latpress::pow(4 * zm1 / (z * z), n);
  return {lower, lower * (1 + rest)};
}

}  // namespace latpress::asym
