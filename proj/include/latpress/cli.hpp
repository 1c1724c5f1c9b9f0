#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "latpress/profile.hpp"

namespace latpress::cli {

// Exit codes: 0 success, 2 usage error, 3 domain error (invalid query),
// 4 internal invariant violation (a DegenerateRatio is a bug, never
// expected input behaviour).
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitInternal = 4;

enum class Subcommand { Profile, Compare, Converge, OracleCheck, Table };
enum class OutputFormat { Csv, Json };

struct RunConfig {
  Subcommand subcommand = Subcommand::Profile;
  ModelKind model = ModelKind::DyckPath;
  unsigned n = 0;
  Rational z;                       // parsed exactly from "p/q" or integer text
  std::vector<Rational> z_list;     // oracle-check sweep activities
  profile::Method method;           // profile
  profile::Method method_a;         // compare
  profile::Method method_b;
  unsigned grid = 63;               // uniform interior points k/(grid+1)
  std::vector<double> a_points;     // explicit grid, overrides `grid`
  double a = 0.5;                   // converge
  double a_min = 0.0;               // compare statistics window
  double a_max = 1.0;
  std::vector<unsigned> n_list;     // converge
  unsigned max_steps = 16;          // oracle-check path sweep bound
  unsigned max_half = 8;            // oracle-check staircase sweep bound
  std::optional<unsigned> j;        // table: staircase endpoint separation
  OutputFormat format = OutputFormat::Csv;
  std::string output_path;          // empty = stdout
  unsigned threads = 1;
};

// Executes a parsed configuration, writing the document to `out`.
int run(const RunConfig& config, std::ostream& out);

// Full front end: argv -> RunConfig -> run().  Documents go to the
// configured output path or to `out`.
int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latpress::cli
