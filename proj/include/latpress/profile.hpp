#pragma once

#include <span>
#include <vector>

#include "latpress/asymptotics.hpp"
#include "latpress/types.hpp"

namespace latpress::profile {

enum class MethodKind { Exact, Oracle, Asymptotic };

struct Method {
  MethodKind kind = MethodKind::Exact;
  asym::Variant variant = asym::Variant::LogForm;
};

const char* to_string(const Method& m);
Method parse_method(std::string_view name);

// One grid point.  q is the realized wall index from the floor map so
// the quantization is auditable; points where the method is undefined
// (asymptotic validity failures, or a mapping to an endpoint) keep their
// slot with defined = false rather than being dropped.
struct ProfilePoint {
  double a;
  long q;
  double value;
  bool defined;
};

struct PressureProfile {
  ModelKind model;
  unsigned n;
  Rational z;
  Method method;
  std::vector<ProfilePoint> points;
};

// The fixed a -> q map: paths q = 2*floor(a n / 2), staircase q = floor(a n).
long wall_index(ModelKind model, unsigned n, double a);

// Uniform interior grid k/(count+1), k = 1..count.
std::vector<double> uniform_grid(unsigned count);

// Pointwise evaluation over a strictly increasing grid in (0,1).
// Duplicate q values arising from the floor map are computed once.  The
// Oracle method is guarded to enumeration reach (paths <= 64 steps,
// staircase half-length <= 14).  Evaluation may run on `threads` workers;
// the output is identical to sequential evaluation.
PressureProfile build_profile(ModelKind model, unsigned n, const Rational& z,
                              Method method, std::span<const double> a_grid,
                              unsigned threads = 1);

struct GapPoint {
  double a;
  long q;
  double value_a;
  double value_b;
  double abs_gap;
  double rel_gap;
};

// Pointwise and summary comparison of two profiles over the same grid.
// Statistics cover only points defined in both profiles and, when a
// window is given, only a in [a_min, a_max].
struct ComparisonReport {
  ModelKind model = ModelKind::DyckPath;
  unsigned n = 0;
  Rational z;
  Method method_a;
  Method method_b;
  double a_min = 0.0;
  double a_max = 1.0;
  std::vector<GapPoint> points;
  std::size_t compared = 0;
  double max_abs_gap = 0.0;
  double mean_abs_gap = 0.0;
  double max_rel_gap = 0.0;
  double mean_rel_gap = 0.0;
};

ComparisonReport compare(const PressureProfile& pa, const PressureProfile& pb,
                         double a_min = 0.0, double a_max = 1.0);

// Exact / asymptotic / limiting pressure at fixed a while n grows.
struct ConvergenceRow {
  unsigned n;
  double exact;
  double asymptotic;
  bool asymptotic_defined;
  double limiting;
};

std::vector<ConvergenceRow> convergence_table(ModelKind model, const Rational& z,
                                              double a, std::span<const unsigned> n_list);

}  // namespace latpress::profile
