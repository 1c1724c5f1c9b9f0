#pragma once

#include <stdexcept>
#include <string_view>

#include "latpress/rational.hpp"

namespace latpress {

// The three adsorbing models.  For the path models the size parameter n
// counts lattice steps; for staircase polygons n is the half-length of
// each constituent path (the bottom path has 2n steps) and wall positions
// are addressed in the same half-units (lattice coordinate 2q).
enum class ModelKind { DirectedPath, DyckPath, StaircasePolygon };

enum class Regime { Subcritical, Critical, Supercritical };

// A pressure evaluation point: wall vertex q strictly inside (0, n).
struct PressureQuery {
  ModelKind model;
  unsigned n;
  Rational z;
  unsigned q;
};

// Pressure split into its exact and floating parts.  `ratio` is the
// excluded-configuration fraction, held exactly; `value` = log(1 - ratio)
// is the only floating-point quantity and is always <= 0.
struct ExactPressure {
  Rational ratio;
  long double value;
};

// Raised when a pressure ratio falls outside [0, 1).  This cannot happen
// for a well-posed query; it signals formula misuse, not bad input.
struct DegenerateRatio : std::logic_error {
  using std::logic_error::logic_error;
};

// Raised when an asymptotic log-form argument is not positive, i.e. the
// approximation has been evaluated outside its validity range (typically
// a too close to 0 or 1 at small n).
struct OutOfRegimeValidity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* to_string(ModelKind m);
ModelKind parse_model(std::string_view name);

}  // namespace latpress
