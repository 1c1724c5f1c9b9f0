#include "latpress/oracle.hpp"

#include <stdexcept>
#include <vector>

#include "latpress/exact.hpp"

namespace latpress::oracle {

namespace {

void check_constraint(unsigned length, const PathConstraint& c) {
  if (c.avoid && c.force_through)
    throw std::domain_error("avoid and force_through are mutually exclusive");
  for (const auto* p : {&c.avoid, &c.force_through}) {
    if (!*p) continue;
    const LatticePoint& pt = **p;
    if (pt.y != 0)
      throw std::domain_error("constraints apply to wall visits only (y = 0)");
    if (pt.x < 0 || pt.x > static_cast<long>(length) || (pt.x + pt.y) % 2 != 0)
      throw std::domain_error("constraint point not reachable on the walk lattice");
  }
}

void require_activity(const Rational& z) {
  if (z <= 0) throw std::domain_error("activity z must be positive");
}

}  // namespace

OracleCount count_directed(unsigned length, const Rational& z,
                           const PathConstraint& constraint) {
  require_activity(z);
  check_constraint(length, constraint);
  if (constraint.avoid && constraint.avoid->x == 0) return {Rational(0)};

  std::vector<Rational> state(length + 2), next(length + 2);
  state[0] = 1;
  for (unsigned x = 1; x <= length; ++x) {
    for (auto& v : next) v = 0;
    next[0] = state[1] * z;  // only a down-step reaches the wall
    for (unsigned h = 1; h <= x; ++h) next[h] = state[h - 1] + state[h + 1];
    if (constraint.avoid && constraint.avoid->x == static_cast<long>(x)) next[0] = 0;
    if (constraint.force_through && constraint.force_through->x == static_cast<long>(x))
      for (unsigned h = 1; h < next.size(); ++h) next[h] = 0;
    state.swap(next);
  }

  switch (constraint.endpoint) {
    case Endpoint::Free: {
      Rational total = 0;
      for (const auto& v : state) total += v;
      return {total};
    }
    case Endpoint::PinnedToWall:
      return {state[0]};
    case Endpoint::PinnedHeight:
      if (constraint.pinned_height > length) return {Rational(0)};
      return {state[constraint.pinned_height]};
  }
  return {Rational(0)};
}

OracleCount count_staircase(unsigned half_length, unsigned j, const Rational& z,
                            const PathConstraint& constraint) {
  require_activity(z);
  const unsigned steps = 2 * half_length;
  check_constraint(steps, constraint);
  if (constraint.avoid && constraint.avoid->x == 0) return {Rational(0)};
  if (j > half_length) return {Rational(0)};  // top endpoint out of reach

  // state[hb][ht]: bottom at hb >= 0, top at ht >= hb + 2.
  const unsigned HB = steps + 1, HT = steps + 3;
  std::vector<std::vector<Rational>> state(HB, std::vector<Rational>(HT)),
      next(HB, std::vector<Rational>(HT));
  state[0][2] = 1;
  for (unsigned x = 1; x <= steps; ++x) {
    for (auto& col : next)
      for (auto& v : col) v = 0;
    for (unsigned hb = 0; hb < x && hb < HB; ++hb) {
      for (unsigned ht = hb + 2; ht < HT && ht <= x + 1; ++ht) {
        const Rational& cur = state[hb][ht];
        if (cur == 0) continue;
        for (int db : {1, -1}) {
          const long hb2 = static_cast<long>(hb) + db;
          if (hb2 < 0) continue;
          for (int dt : {1, -1}) {
            const long ht2 = static_cast<long>(ht) + dt;
            if (ht2 < hb2 + 2) continue;
            Rational w = cur;
            if (hb2 == 0) w *= z;
            next[hb2][ht2] += w;
          }
        }
      }
    }
    if (constraint.avoid && constraint.avoid->x == static_cast<long>(x))
      for (auto& v : next[0]) v = 0;
    if (constraint.force_through && constraint.force_through->x == static_cast<long>(x))
      for (unsigned hb = 1; hb < HB; ++hb)
        for (auto& v : next[hb]) v = 0;
    state.swap(next);
  }
  return {state[0][2 * j + 2]};
}

ExactPressure oracle_pressure(const PressureQuery& query) {
  require_activity(query.z);
  if (query.n == 0) throw std::domain_error("size parameter n must be positive");
  if (query.q == 0 || query.q >= query.n)
    throw std::domain_error("pressure is defined at interior wall vertices only");

  if (query.model != ModelKind::StaircasePolygon && query.q % 2)
    return {Rational(0), 0.0L};  // no configuration meets the wall at odd x

  Rational total, avoiding;
  if (query.model == ModelKind::StaircasePolygon) {
    total = count_staircase(query.n, 0, query.z).value;
    PathConstraint av;
    av.avoid = LatticePoint{2L * query.q, 0};
    avoiding = count_staircase(query.n, 0, query.z, av).value;
  } else {
    PathConstraint base;
    base.endpoint = query.model == ModelKind::DyckPath ? Endpoint::PinnedToWall
                                                       : Endpoint::Free;
    if (query.model == ModelKind::DyckPath && query.n % 2)
      throw std::domain_error("Dyck pressure requires an even number of steps");
    total = count_directed(query.n, query.z, base).value;
    PathConstraint av = base;
    av.avoid = LatticePoint{static_cast<long>(query.q), 0};
    avoiding = count_directed(query.n, query.z, av).value;
  }

  Rational ratio = 1 - avoiding / total;
  if (ratio < 0 || ratio >= 1)
    throw DegenerateRatio("excluded fraction outside [0,1): " + to_string(ratio));
  return {ratio, log_one_minus(ratio)};
}

}  // namespace latpress::oracle
