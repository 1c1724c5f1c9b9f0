#pragma once

#include <utility>

#include "latpress/types.hpp"

namespace latpress::asym {

// Exact trichotomy of the activity against the adsorption point z_c = 2.
Regime regime(const Rational& z);

// Limiting free energy of adsorbing Dyck paths:
// log 2 for z <= 2, log z - (1/2) log(z-1) above.
double free_energy_dyck(const Rational& z);

// Density of wall visits: 0 for z <= 2, (z-2)/(2(z-1)) above.
double visit_density(const Rational& z);

// Saddle locations of the partition-function summands.  delta is the
// m-sum saddle (z-2)/(2z) clamped at 0; alpha_m and alpha_M are the
// k-sum saddles of the two staircase summand families, reported at
// endpoint separation delta = 0 (both clamp to (z-2)/z below z = 2).
struct SaddleLocations {
  double delta;
  double alpha_m;
  double alpha_M;
};
SaddleLocations saddle_locations(const Rational& z);

// n -> infinity pressure at any interior a: 0 in and at the desorbed
// boundary (z <= 2), -log(z-1) in the adsorbed regime.  Identical for
// all three models.
double limiting_pressure(const Rational& z);

// Two published presentations of each finite-n approximation:
//  - LogForm keeps the log(...) structure (and, for supercritical path
//    models, substitutes the corrected partition approximations into the
//    exact log-ratio);
//  - Summary is the expanded leading-order form.
enum class Variant { LogForm, Summary };

struct AsymptoticPressure {
  double value;
  Regime regime;
  const char* order_tag;  // "n^-3/2", "n^-1/2", or "n^-1" about -log(z-1)
};

// Finite-n asymptotic pressure at relative wall position a in (0,1).
// Path models at z = 1 dispatch to the pure-entropy profiles (the
// subcritical forms degenerate there); the staircase subcritical form is
// finite at z = 1 and is used directly.  Throws OutOfRegimeValidity when
// a log-form argument is not positive.
AsymptoticPressure asym_pressure(ModelKind model, unsigned n, const Rational& z,
                                 double a, Variant variant = Variant::LogForm);

// Scaling-limit residual pressure at z = 1 (path models only):
// lim n^{3/2} P of paths of 2n steps at wall position 2*floor(a n).
double rescaled_residual(ModelKind model, double a);

// Exact rational sandwich for D_{2n}(z), z > 2:
//   (z-2)/(z-1) (z^2/(z-1))^n  <=  D_{2n}(z)  <=  same * (1 + rest_n)
// with rest_n = z(z-1)/(z-2)^3 (4(z-1)/z^2)^n.
struct DyckBounds {
  Rational lower;
  Rational upper;
};
DyckBounds dyck_bounds(unsigned n, const Rational& z);

}  // namespace latpress::asym
