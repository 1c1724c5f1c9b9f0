#include "latpress/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "latpress/exact.hpp"
#include "latpress/oracle.hpp"

namespace latpress::cli {

namespace {

using nlohmann::json;

// Shortest representation that round-trips, so documents are
// byte-deterministic for a fixed configuration.
std::string fmt(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string method_name(const profile::Method& m) { return profile::to_string(m); }

void emit_profile_csv(const profile::PressureProfile& p, std::ostream& out) {
  out << "model,n,z,method,a,q,value,defined\n";
  for (const auto& pt : p.points) {
    out << to_string(p.model) << ',' << p.n << ',' << to_string(p.z) << ','
        << method_name(p.method) << ',' << fmt(pt.a) << ',' << pt.q << ',';
    if (pt.defined) out << fmt(pt.value);
    out << ',' << (pt.defined ? "true" : "false") << '\n';
  }
}

json profile_json(const profile::PressureProfile& p) {
  json points = json::array();
  for (const auto& pt : p.points) {
    json row{{"a", pt.a}, {"q", pt.q}, {"defined", pt.defined}};
    if (pt.defined)
      row["value"] = pt.value;
    else
      row["value"] = nullptr;
    points.push_back(std::move(row));
  }
  return json{{"type", "profile"},
              {"model", to_string(p.model)},
              {"n", p.n},
              {"z", to_string(p.z)},
              {"method", method_name(p.method)},
              {"points", std::move(points)}};
}

void emit_compare_csv(const profile::ComparisonReport& r, std::ostream& out) {
  out << "# model=" << to_string(r.model) << " n=" << r.n << " z=" << to_string(r.z)
      << " method_a=" << method_name(r.method_a)
      << " method_b=" << method_name(r.method_b) << " window=[" << fmt(r.a_min) << ','
      << fmt(r.a_max) << "] compared=" << r.compared
      << " max_abs_gap=" << fmt(r.max_abs_gap) << " mean_abs_gap=" << fmt(r.mean_abs_gap)
      << " max_rel_gap=" << fmt(r.max_rel_gap) << " mean_rel_gap=" << fmt(r.mean_rel_gap)
      << '\n';
  out << "a,q,value_a,value_b,abs_gap,rel_gap\n";
  for (const auto& g : r.points)
    out << fmt(g.a) << ',' << g.q << ',' << fmt(g.value_a) << ',' << fmt(g.value_b)
        << ',' << fmt(g.abs_gap) << ',' << fmt(g.rel_gap) << '\n';
}

json compare_json(const profile::ComparisonReport& r) {
  json points = json::array();
  for (const auto& g : r.points)
    points.push_back(json{{"a", g.a},
                          {"q", g.q},
                          {"value_a", g.value_a},
                          {"value_b", g.value_b},
                          {"abs_gap", g.abs_gap},
                          {"rel_gap", g.rel_gap}});
  return json{{"type", "comparison"},
              {"model", to_string(r.model)},
              {"n", r.n},
              {"z", to_string(r.z)},
              {"method_a", method_name(r.method_a)},
              {"method_b", method_name(r.method_b)},
              {"window", json::array({r.a_min, r.a_max})},
              {"stats",
               json{{"compared", r.compared},
                    {"max_abs_gap", r.max_abs_gap},
                    {"mean_abs_gap", r.mean_abs_gap},
                    {"max_rel_gap", r.max_rel_gap},
                    {"mean_rel_gap", r.mean_rel_gap}}},
              {"points", std::move(points)}};
}

void emit_converge_csv(const RunConfig& c, const std::vector<profile::ConvergenceRow>& rows,
                       std::ostream& out) {
  out << "model,z,a,n,exact,asymptotic,limiting\n";
  for (const auto& r : rows) {
    out << to_string(c.model) << ',' << to_string(c.z) << ',' << fmt(c.a) << ',' << r.n
        << ',' << fmt(r.exact) << ',';
    if (r.asymptotic_defined) out << fmt(r.asymptotic);
    out << ',' << fmt(r.limiting) << '\n';
  }
}

json converge_json(const RunConfig& c, const std::vector<profile::ConvergenceRow>& rows) {
  json jrows = json::array();
  for (const auto& r : rows) {
    json row{{"n", r.n}, {"exact", r.exact}, {"limiting", r.limiting}};
    if (r.asymptotic_defined)
      row["asymptotic"] = r.asymptotic;
    else
      row["asymptotic"] = nullptr;
    jrows.push_back(std::move(row));
  }
  return json{{"type", "convergence"},
              {"model", to_string(c.model)},
              {"z", to_string(c.z)},
              {"a", c.a},
              {"rows", std::move(jrows)}};
}

struct SweepLine {
  std::string family;
  std::string z;
  std::size_t cases = 0;
  std::size_t failures = 0;
};

// Exhaustive exact-vs-enumeration equivalence over a bounded sweep.
std::vector<SweepLine> oracle_sweep(const RunConfig& c) {
  std::vector<SweepLine> lines;
  for (const Rational& z : c.z_list) {
    SweepLine part{"partition", to_string(z), 0, 0};
    SweepLine press{"pressure", to_string(z), 0, 0};
    for (unsigned n = 2; n <= c.max_steps; n += 2) {
      oracle::PathConstraint free_end, pinned;
      pinned.endpoint = oracle::Endpoint::PinnedToWall;
      ++part.cases;
      if (oracle::count_directed(n, z, free_end).value != exact::partition_directed(n, z))
        ++part.failures;
      ++part.cases;
      if (oracle::count_directed(n, z, pinned).value != exact::partition_dyck(n, z))
        ++part.failures;
      for (unsigned q = 2; q < n; q += 2) {
        for (ModelKind m : {ModelKind::DirectedPath, ModelKind::DyckPath}) {
          ++press.cases;
          const auto a = exact::pressure({m, n, z, q});
          const auto b = oracle::oracle_pressure({m, n, z, q});
          if (a.ratio != b.ratio || a.value != b.value) ++press.failures;
        }
      }
    }
    for (unsigned n = 1; n <= c.max_half; ++n) {
      for (unsigned j = 0; j <= n; ++j) {
        ++part.cases;
        if (oracle::count_staircase(n, j, z).value != exact::partition_staircase(n, j, z))
          ++part.failures;
      }
      for (unsigned q = 1; q < n; ++q) {
        ++press.cases;
        const auto a = exact::pressure({ModelKind::StaircasePolygon, n, z, q});
        const auto b = oracle::oracle_pressure({ModelKind::StaircasePolygon, n, z, q});
        if (a.ratio != b.ratio || a.value != b.value) ++press.failures;
      }
    }
    lines.push_back(part);
    lines.push_back(press);
  }
  return lines;
}

void emit_sweep_csv(const std::vector<SweepLine>& lines, std::ostream& out) {
  out << "check,z,cases,failures\n";
  std::size_t cases = 0, failures = 0;
  for (const auto& l : lines) {
    out << l.family << ',' << l.z << ',' << l.cases << ',' << l.failures << '\n';
    cases += l.cases;
    failures += l.failures;
  }
  out << "total,," << cases << ',' << failures << '\n';
}

json sweep_json(const std::vector<SweepLine>& lines) {
  json rows = json::array();
  std::size_t cases = 0, failures = 0;
  for (const auto& l : lines) {
    rows.push_back(json{
        {"check", l.family}, {"z", l.z}, {"cases", l.cases}, {"failures", l.failures}});
    cases += l.cases;
    failures += l.failures;
  }
  return json{{"type", "oracle-check"},
              {"cases", cases},
              {"failures", failures},
              {"rows", std::move(rows)}};
}

struct TableRow {
  std::string quantity;
  unsigned n;
  std::string j;  // empty for path models
  Rational value;
};

std::vector<TableRow> table_rows(const RunConfig& c) {
  std::vector<TableRow> rows;
  switch (c.model) {
    case ModelKind::DirectedPath:
      rows.push_back({"T", c.n, "", exact::partition_directed(c.n, c.z)});
      break;
    case ModelKind::DyckPath:
      rows.push_back({"D", c.n, "", exact::partition_dyck(c.n, c.z)});
      break;
    case ModelKind::StaircasePolygon:
      if (c.j) {
        rows.push_back({"C", c.n, std::to_string(*c.j),
                        exact::partition_staircase(c.n, *c.j, c.z)});
      } else {
        const auto row = exact::staircase_row(c.n, c.n, c.z);
        for (unsigned j = 0; j <= c.n; ++j)
          rows.push_back({"C", c.n, std::to_string(j), row[j]});
      }
      break;
  }
  return rows;
}

void emit_table_csv(const RunConfig& c, const std::vector<TableRow>& rows,
                    std::ostream& out) {
  out << "quantity,n,z,j,value\n";
  for (const auto& r : rows)
    out << r.quantity << ',' << r.n << ',' << to_string(c.z) << ',' << r.j << ','
        << to_string(r.value) << '\n';
}

json table_json(const RunConfig& c, const std::vector<TableRow>& rows) {
  json jrows = json::array();
  for (const auto& r : rows) {
    json row{{"quantity", r.quantity}, {"n", r.n}, {"value", to_string(r.value)}};
    if (!r.j.empty()) row["j"] = std::stoul(r.j);
    jrows.push_back(std::move(row));
  }
  return json{
      {"type", "table"}, {"z", to_string(c.z)}, {"model", to_string(c.model)},
      {"rows", std::move(jrows)}};
}

std::vector<double> grid_of(const RunConfig& c) {
  if (!c.a_points.empty()) return c.a_points;
  return profile::uniform_grid(c.grid);
}

int run_to(const RunConfig& c, std::ostream& out) {
  switch (c.subcommand) {
    case Subcommand::Profile: {
      const auto grid = grid_of(c);
      const auto prof = profile::build_profile(c.model, c.n, c.z, c.method, grid, c.threads);
      if (c.format == OutputFormat::Csv)
        emit_profile_csv(prof, out);
      else
        out << profile_json(prof).dump() << '\n';
      return kExitOk;
    }
    case Subcommand::Compare: {
      const auto grid = grid_of(c);
      const auto pa = profile::build_profile(c.model, c.n, c.z, c.method_a, grid, c.threads);
      const auto pb = profile::build_profile(c.model, c.n, c.z, c.method_b, grid, c.threads);
      const auto rep = profile::compare(pa, pb, c.a_min, c.a_max);
      if (c.format == OutputFormat::Csv)
        emit_compare_csv(rep, out);
      else
        out << compare_json(rep).dump() << '\n';
      return kExitOk;
    }
    case Subcommand::Converge: {
      const auto rows = profile::convergence_table(c.model, c.z, c.a, c.n_list);
      if (c.format == OutputFormat::Csv)
        emit_converge_csv(c, rows, out);
      else
        out << converge_json(c, rows).dump() << '\n';
      return kExitOk;
    }
    case Subcommand::OracleCheck: {
      const auto lines = oracle_sweep(c);
      std::size_t failures = 0;
      for (const auto& l : lines) failures += l.failures;
      if (c.format == OutputFormat::Csv)
        emit_sweep_csv(lines, out);
      else
        out << sweep_json(lines).dump() << '\n';
      return failures == 0 ? kExitOk : kExitInternal;
    }
    case Subcommand::Table: {
      const auto rows = table_rows(c);
      if (c.format == OutputFormat::Csv)
        emit_table_csv(c, rows, out);
      else
        out << table_json(c, rows).dump() << '\n';
      return kExitOk;
    }
  }
  return kExitUsage;
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("LATPRESS_OUTPUT_DIR")) p = std::filesystem::path(dir) / p;
  }
  return p;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out) {
  try {
    if (config.output_path.empty()) return run_to(config, out);
    std::ofstream file(resolve_output(config.output_path));
    if (!file) throw std::domain_error("cannot open output file " + config.output_path);
    return run_to(config, file);
  } catch (const DegenerateRatio& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const OutOfRegimeValidity& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

namespace {

std::vector<double> parse_a_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad grid point '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty point list");
  return out;
}

}  // namespace

int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and asymptotic wall pressure of adsorbing lattice paths"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string model_s = "dyck", z_s, method_s = "exact", method_a_s, method_b_s;
  std::string points_s, nlist_s, zlist_s, format_s = "csv";

  auto exact_rational = CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          parse_rational(s);
        } catch (const std::exception& e) {
          return e.what();
        }
        return {};
      },
      "RATIONAL", "exact rational");

  auto add_common = [&](CLI::App* sub, bool with_model, bool with_n, bool with_z) {
    if (with_model)
      sub->add_option("--model", model_s, "directed|dyck|staircase")->required();
    if (with_n) sub->add_option("--n", cfg.n, "size parameter")->required();
    if (with_z)
      sub->add_option("--z", z_s, "activity, exact rational \"p/q\" or integer")
          ->required()
          ->check(exact_rational);
    sub->add_option("--format", format_s, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", cfg.output_path, "output file (default: stdout)");
  };

  auto* prof = app.add_subcommand("profile", "pressure profile over an a-grid");
  add_common(prof, true, true, true);
  prof->add_option("--method", method_s, "exact|oracle|asym|asym-summary");
  prof->add_option("--grid", cfg.grid, "uniform interior points k/(grid+1)");
  prof->add_option("--points", points_s, "explicit a values, comma separated");
  prof->add_option("--threads", cfg.threads, "worker threads (output is identical)");

  auto* cmp = app.add_subcommand("compare", "pointwise gap between two methods");
  add_common(cmp, true, true, true);
  cmp->add_option("--method-a", method_a_s, "first method")->required();
  cmp->add_option("--method-b", method_b_s, "second method")->required();
  cmp->add_option("--grid", cfg.grid, "uniform interior points k/(grid+1)");
  cmp->add_option("--points", points_s, "explicit a values, comma separated");
  cmp->add_option("--a-min", cfg.a_min, "statistics window lower edge");
  cmp->add_option("--a-max", cfg.a_max, "statistics window upper edge");
  cmp->add_option("--threads", cfg.threads, "worker threads");

  auto* conv = app.add_subcommand("converge", "approach to the limiting pressure");
  add_common(conv, true, false, true);
  conv->add_option("--a", cfg.a, "wall position fraction")->required();
  conv->add_option("--n-list", nlist_s, "sizes, comma separated, increasing")->required();

  auto* och = app.add_subcommand("oracle-check", "exact-vs-enumeration equivalence sweep");
  add_common(och, false, false, false);
  och->add_option("--max-steps", cfg.max_steps, "largest path length (even)");
  och->add_option("--max-half", cfg.max_half, "largest staircase half-length");
  och->add_option("--z", zlist_s, "activities, comma separated exact rationals")
      ->required();

  auto* tab = app.add_subcommand("table", "partition-function values, exact");
  add_common(tab, true, true, true);
  unsigned j_value = 0;
  auto* jopt = tab->add_option("--j", j_value, "staircase endpoint separation");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    cfg.model = parse_model(model_s);
    cfg.format = format_s == "json" ? OutputFormat::Json : OutputFormat::Csv;
    if (!z_s.empty()) cfg.z = parse_rational(z_s);
    cfg.method = profile::parse_method(method_s);
    if (!method_a_s.empty()) cfg.method_a = profile::parse_method(method_a_s);
    if (!method_b_s.empty()) cfg.method_b = profile::parse_method(method_b_s);
    if (!points_s.empty()) cfg.a_points = parse_a_list(points_s);
    if (!nlist_s.empty()) {
      std::stringstream ss(nlist_s);
      std::string item;
      while (std::getline(ss, item, ',')) cfg.n_list.push_back(std::stoul(item));
    }
    if (!zlist_s.empty()) {
      std::stringstream ss(zlist_s);
      std::string item;
      while (std::getline(ss, item, ',')) cfg.z_list.push_back(parse_rational(item));
    }
    if (*jopt) cfg.j = j_value;

    if (prof->parsed()) cfg.subcommand = Subcommand::Profile;
    else if (cmp->parsed()) cfg.subcommand = Subcommand::Compare;
    else if (conv->parsed()) cfg.subcommand = Subcommand::Converge;
    else if (och->parsed()) cfg.subcommand = Subcommand::OracleCheck;
    else if (tab->parsed()) cfg.subcommand = Subcommand::Table;
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  return run(cfg, out);
}

}  // namespace latpress::cli
