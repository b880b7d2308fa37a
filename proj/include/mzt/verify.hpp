#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mzt/precision.hpp"

namespace mzt {

// One two-route comparison.  pass is always |lhs - rhs| <= budget, where the
// budget is the sum of both routes' tail bounds plus 10^-target_digits of
// rounding allowance; numeric fields are decimal strings so reports are
// platform-independent.
struct ComparisonRecord {
  std::string label;
  std::string lhs_route;
  std::string rhs_route;
  std::string lhs_value;
  std::string rhs_value;
  std::string abs_diff;
  std::string budget;
  int agree_digits;
  bool pass;
};

struct ExactCheckRecord {
  std::string family;
  std::string parameters;
  bool pass;
};

struct ReportSummary {
  std::uint64_t total;
  std::uint64_t passed;
  std::uint64_t failed;
};

struct VerificationReport {
  PrecisionContext context;
  int rmax = -1;  // grid extent; -1 when no grid section ran
  int smax = -1;
  std::vector<std::string> routes;
  long direct_terms = 0;
  std::vector<ComparisonRecord> records;  // sorted by label
  std::vector<ExactCheckRecord> exact_checks;
  std::map<std::string, double> wall_seconds;

  ReportSummary summary() const;
};

enum class GridRoute { zagier, lyh, direct, murakami, t_lyh, t_direct, k_equiv, b, d };

std::string grid_route_name(GridRoute route);

// Comma-separated route names, or "all".  Unknown names throw ConfigError.
std::set<GridRoute> parse_routes(const std::string& csv);

struct GridOptions {
  int rmax = 4;
  int smax = 4;
  std::set<GridRoute> routes;  // empty means all
  long direct_terms = 100000;
  unsigned threads = 0;  // 0: hardware concurrency
  // Flips the sign of the k=1 coefficient of the zagier route at (0,0).
  // Exists to prove the comparisons catch a single wrong sign.
  bool mutate_zagier_sign = false;
};

// Runs every comparison the route set enables on the (r,s) grid.  Constants
// are populated up front; the per-cell comparisons then run on a small thread
// pool and land in label-sorted order, so reports are deterministic for fixed
// options.
VerificationReport run_grid(const GridOptions& options, const PrecisionContext& ctx);

struct ExactCheckBounds {
  int pf_max = 12;        // partial fractions: 1 <= j < m <= pf_max
  int bin_rmax = 20;      // binomial identities: r <= bin_rmax, s <= bin_smax
  int bin_smax = 10;
  int shifted_max = 10;   // shifted sums: r, s <= shifted_max
  unsigned long bern_max = 40;  // bernoulli sweeps through B_bern_max
  int delta_cases = 1000;       // randomized delta-filter cases, fixed seed
};

// The exact (rational arithmetic) check battery; every record must pass.
std::vector<ExactCheckRecord> run_exact_checks(const ExactCheckBounds& bounds);

enum class ReportFormat { json, csv };

// JSON: full report object.  CSV: comparison records only, one line each.
void emit_report(const VerificationReport& report, ReportFormat format, std::ostream& out);

}  // namespace mzt
