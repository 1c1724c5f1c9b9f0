#pragma once

#include <optional>

#include "latpress/types.hpp"

namespace latpress::oracle {

// Ground truth by dynamic programming over lattice heights, kept in exact
// rationals so that equality assertions against the closed-form module
// are exact, never approximate.

struct LatticePoint {
  long x;
  long y;
};

enum class Endpoint { Free, PinnedToWall, PinnedHeight };

// Wall-visit constraints.  avoid and force_through are mutually
// exclusive; constraint points must lie on the wall (y = 0) with
// 0 <= x <= length and x even, matching the pressure-at-(q,0) semantics.
struct PathConstraint {
  std::optional<LatticePoint> avoid;
  std::optional<LatticePoint> force_through;
  Endpoint endpoint = Endpoint::Free;
  unsigned pinned_height = 0;
};

struct OracleCount {
  Rational value;
};

// Weighted count of directed paths of `length` NE/SE steps from the
// origin in the upper half plane.  Every landing on the wall after the
// origin carries weight z; the origin itself is unweighted.
OracleCount count_directed(unsigned length, const Rational& z,
                           const PathConstraint& constraint = {});

// Weighted count of non-crossing pairs: bottom path from (0,0) to
// (2n,0), top path from (0,2) to (2n, 2j+2), top strictly above bottom
// throughout.  Wall visits of the bottom path are weighted; constraints
// apply to the bottom path only.
OracleCount count_staircase(unsigned half_length, unsigned j, const Rational& z,
                            const PathConstraint& constraint = {});

// Pressure from DP counts alone: log(Z_avoiding / Z_total) with the
// avoid constraint at the queried wall vertex.  No factorization of the
// passing-through count is used, so this is an independent route that
// must coincide exactly with exact::pressure.
ExactPressure oracle_pressure(const PressureQuery& query);

}  // namespace latpress::oracle
