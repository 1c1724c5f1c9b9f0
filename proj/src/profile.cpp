#include "latpress/profile.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "latpress/exact.hpp"
#include "latpress/oracle.hpp"

namespace latpress::profile {

namespace {

constexpr unsigned kOracleMaxSteps = 64;
constexpr unsigned kOracleMaxHalf = 14;

// Staircase exact profiles reuse C_m(z;j) rows across grid points; the
// cache is per build_profile call and grows a row when a later point
// needs a larger jmax.
class StairCache {
 public:
  StairCache(unsigned n, const Rational& z) : n_(n), z_(z) {}

  Rational pressure_ratio(unsigned q) {
    const unsigned jmax = std::min(q, n_ - q);
    const auto left = row(q, jmax);
    const auto right = row(n_ - q, jmax);
    Rational total = 0;
    for (unsigned j = 0; j <= jmax; ++j) total += (*left)[j] * (*right)[j];
    return total / ground();
  }

 private:
  std::shared_ptr<const std::vector<Rational>> row(unsigned half, unsigned jmax) {
    {
      std::lock_guard lock(mu_);
      auto it = rows_.find(half);
      if (it != rows_.end() && it->second->size() > jmax) return it->second;
    }
    auto fresh = std::make_shared<const std::vector<Rational>>(
        exact::staircase_row(half, jmax, z_));
    std::lock_guard lock(mu_);
    auto& slot = rows_[half];
    if (!slot || slot->size() < fresh->size()) slot = std::move(fresh);
    return rows_[half];
  }

  const Rational& ground() {
    std::call_once(ground_once_, [this] { ground_ = exact::partition_staircase(n_, 0, z_); });
    return ground_;
  }

  unsigned n_;
  Rational z_;
  std::mutex mu_;
  std::map<unsigned, std::shared_ptr<const std::vector<Rational>>> rows_;
  std::once_flag ground_once_;
  Rational ground_;
};

}  // namespace

const char* to_string(const Method& m) {
  switch (m.kind) {
    case MethodKind::Exact: return "exact";
    case MethodKind::Oracle: return "oracle";
    case MethodKind::Asymptotic:
      return m.variant == asym::Variant::LogForm ? "asymptotic" : "asymptotic-summary";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "exact") return {MethodKind::Exact, asym::Variant::LogForm};
  if (name == "oracle") return {MethodKind::Oracle, asym::Variant::LogForm};
  if (name == "asym" || name == "asymptotic")
    return {MethodKind::Asymptotic, asym::Variant::LogForm};
  if (name == "asym-summary" || name == "asymptotic-summary")
    return {MethodKind::Asymptotic, asym::Variant::Summary};
  throw std::invalid_argument("unknown method '" + std::string(name) +
                              "' (exact|oracle|asym|asym-summary)");
}

long wall_index(ModelKind model, unsigned n, double a) {
  if (model == ModelKind::StaircasePolygon)
    return static_cast<long>(std::floor(a * static_cast<double>(n)));
  return 2 * static_cast<long>(std::floor(a * static_cast<double>(n) / 2.0));
}

std::vector<double> uniform_grid(unsigned count) {
  if (count == 0) throw std::domain_error("grid needs at least one point");
  std::vector<double> grid(count);
  for (unsigned k = 1; k <= count; ++k)
    grid[k - 1] = static_cast<double>(k) / static_cast<double>(count + 1);
  return grid;
}

PressureProfile build_profile(ModelKind model, unsigned n, const Rational& z,
                              Method method, std::span<const double> a_grid,
                              unsigned threads) {
  if (n == 0) throw std::domain_error("size parameter n must be positive");
  if (z <= 0) throw std::domain_error("activity z must be positive");
  if (a_grid.empty()) throw std::domain_error("empty a-grid");
  for (std::size_t i = 0; i < a_grid.size(); ++i) {
    if (!(a_grid[i] > 0.0 && a_grid[i] < 1.0))
      throw std::domain_error("grid points must lie in (0,1)");
    if (i > 0 && !(a_grid[i] > a_grid[i - 1]))
      throw std::domain_error("grid points must be strictly increasing");
  }
  if (method.kind == MethodKind::Oracle) {
    const bool path = model != ModelKind::StaircasePolygon;
    if ((path && n > kOracleMaxSteps) || (!path && n > kOracleMaxHalf))
      throw std::domain_error("oracle enumeration is guarded to paths <= 64 steps "
                              "and staircase half-length <= 14");
  }

  PressureProfile out{model, n, z, method, {}};
  out.points.resize(a_grid.size());
  for (std::size_t i = 0; i < a_grid.size(); ++i) {
    out.points[i].a = a_grid[i];
    out.points[i].q = wall_index(model, n, a_grid[i]);
    out.points[i].defined = false;
    out.points[i].value = 0.0;
  }

  StairCache stair(n, z);

  auto eval_exact = [&](long q) -> double {
    if (model == ModelKind::StaircasePolygon) {
      Rational ratio = stair.pressure_ratio(static_cast<unsigned>(q));
      if (ratio < 0 || ratio >= 1)
        throw DegenerateRatio("excluded fraction outside [0,1)");
      return static_cast<double>(log_one_minus(ratio));
    }
    return static_cast<double>(
        exact::pressure({model, n, z, static_cast<unsigned>(q)}).value);
  };

  // Exact and oracle values depend on the realized q only; asymptotic
  // values follow the continuous a.
  const bool by_q = method.kind != MethodKind::Asymptotic;
  std::vector<long> unique_q;
  if (by_q) {
    for (const auto& p : out.points)
      if (p.q > 0 && p.q < static_cast<long>(n)) unique_q.push_back(p.q);
    std::sort(unique_q.begin(), unique_q.end());
    unique_q.erase(std::unique(unique_q.begin(), unique_q.end()), unique_q.end());
  }

  std::map<long, ProfilePoint> shared;  // q -> computed value
  std::mutex shared_mu;
  std::atomic<std::size_t> cursor{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (by_q) {
        if (i >= unique_q.size()) return;
        const long q = unique_q[i];
        ProfilePoint r{0.0, q, 0.0, false};
        try {
          r.value = method.kind == MethodKind::Exact
                        ? eval_exact(q)
                        : static_cast<double>(
                              oracle::oracle_pressure({model, n, z,
                                                       static_cast<unsigned>(q)})
                                  .value);
          r.defined = true;
        } catch (const DegenerateRatio&) {
        } catch (const OutOfRegimeValidity&) {
        }
        std::lock_guard lock(shared_mu);
        shared[q] = r;
      } else {
        if (i >= out.points.size()) return;
        ProfilePoint& p = out.points[i];
        if (p.q <= 0 || p.q >= static_cast<long>(n)) continue;
        try {
          p.value = asym::asym_pressure(model, n, z, p.a, method.variant).value;
          p.defined = true;
        } catch (const OutOfRegimeValidity&) {
        }
      }
    }
  };

  const unsigned nthreads = std::max(1u, threads);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  if (by_q) {
    for (auto& p : out.points) {
      auto it = shared.find(p.q);
      if (it == shared.end()) continue;  // endpoint mapping: stays undefined
      p.value = it->second.value;
      p.defined = it->second.defined;
    }
  }
  return out;
}

ComparisonReport compare(const PressureProfile& pa, const PressureProfile& pb,
                         double a_min, double a_max) {
  if (pa.model != pb.model || pa.n != pb.n || pa.z != pb.z)
    throw std::invalid_argument("profiles compare only at matching (model, n, z)");
  if (pa.points.size() != pb.points.size())
    throw std::invalid_argument("profiles compare only over the same grid");
  for (std::size_t i = 0; i < pa.points.size(); ++i)
    if (pa.points[i].a != pb.points[i].a)
      throw std::invalid_argument("profiles compare only over the same grid");

  ComparisonReport rep;
  rep.model = pa.model;
  rep.n = pa.n;
  rep.z = pa.z;
  rep.method_a = pa.method;
  rep.method_b = pb.method;
  rep.a_min = a_min;
  rep.a_max = a_max;
  double abs_sum = 0.0, rel_sum = 0.0;
  for (std::size_t i = 0; i < pa.points.size(); ++i) {
    const auto& x = pa.points[i];
    const auto& y = pb.points[i];
    if (!x.defined || !y.defined) continue;
    GapPoint g{x.a, x.q, x.value, y.value, std::abs(x.value - y.value), 0.0};
    const double scale = std::max(std::abs(x.value), std::abs(y.value));
    g.rel_gap = scale > 0.0 ? g.abs_gap / scale : 0.0;
    rep.points.push_back(g);
    if (x.a < a_min || x.a > a_max) continue;
    ++rep.compared;
    abs_sum += g.abs_gap;
    rel_sum += g.rel_gap;
    rep.max_abs_gap = std::max(rep.max_abs_gap, g.abs_gap);
    rep.max_rel_gap = std::max(rep.max_rel_gap, g.rel_gap);
  }
  if (rep.compared > 0) {
    rep.mean_abs_gap = abs_sum / static_cast<double>(rep.compared);
    rep.mean_rel_gap = rel_sum / static_cast<double>(rep.compared);
  }
  return rep;
}

std::vector<ConvergenceRow> convergence_table(ModelKind model, const Rational& z,
                                              double a, std::span<const unsigned> n_list) {
  if (!(a > 0.0 && a < 1.0)) throw std::domain_error("a must lie in (0,1)");
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1])
      throw std::domain_error("n_list must be strictly increasing");

  const double lim = asym::limiting_pressure(z);
  std::vector<ConvergenceRow> rows;
  rows.reserve(n_list.size());
  for (unsigned n : n_list) {
    const long q = wall_index(model, n, a);
    if (q <= 0 || q >= static_cast<long>(n))
      throw std::domain_error("a maps to an endpoint at n=" + std::to_string(n));
    ConvergenceRow row{n, 0.0, 0.0, false, lim};
    row.exact = static_cast<double>(
        exact::pressure({model, n, z, static_cast<unsigned>(q)}).value);
    try {
      row.asymptotic = asym::asym_pressure(model, n, z, a).value;
      row.asymptotic_defined = true;
    } catch (const OutOfRegimeValidity&) {
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace latpress::profile
