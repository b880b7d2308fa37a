// Acceptance battery: one pass/fail line per criterion, exit 0 only if all
// pass.  argv[1] is the path to the command-line binary, used by the criteria
// that exercise the process boundary (1 and 9); everything else calls the
// library directly.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mzt/closed_forms.hpp"
#include "mzt/combinatorics.hpp"
#include "mzt/constants.hpp"
#include "mzt/direct.hpp"
#include "mzt/series.hpp"
#include "mzt/verify.hpp"
#include "reference_values.hpp"

using namespace mzt;

namespace {

std::string g_cli;

struct CliResult {
  std::string out;
  int status = -1;
};

CliResult run_cli(const std::string& args) {
  CliResult result;
  std::string cmd = "\"" + g_cli + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
  int rc = pclose(pipe);
  if (WIFEXITED(rc)) result.status = WEXITSTATUS(rc);
  return result;
}

// First "value: ..." payload in CLI output, empty if absent.
std::string parse_value_line(const std::string& out) {
  std::istringstream lines(out);
  std::string line;
  while (std::getline(lines, line))
    if (line.rfind("value: ", 0) == 0) return line.substr(7);
  return "";
}

int g_passed = 0;
int g_ran = 0;

template <typename Fn>
void criterion(int n, const char* name, double time_limit_seconds, Fn&& body) {
  ++g_ran;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::cerr << "criterion " << n << ": exception: " << e.what() << "\n";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (ok && time_limit_seconds > 0 && secs > time_limit_seconds) {
    std::cerr << "criterion " << n << ": exceeded " << time_limit_seconds << "s\n";
    ok = false;
  }
  if (ok) ++g_passed;
  std::cout << "criterion " << n << " (" << name << "): " << (ok ? "PASS" : "FAIL") << " ("
            << std::fixed << std::setprecision(2) << secs << "s)\n";
}

bool fail_note(const std::string& note) {
  std::cerr << "  " << note << "\n";
  return false;
}

}  // namespace

// 1. H(0,0) = zeta(3) and T(0,0) = (7/8) zeta(3) through the CLI, 45 digits.
static bool base_case_collapse() {
  PrecisionContext ctx = make_context(50, 10);
  CliResult h = run_cli("eval h --r 0 --s 0 --route zagier --digits 50");
  if (h.status != 0) return fail_note("eval h exited " + std::to_string(h.status));
  std::string hv = parse_value_line(h.out);
  if (hv.empty()) return fail_note("eval h printed no value line");
  if (agree_digits(Real::parse(hv, ctx), Real::parse(refs::kZeta3, ctx)) < 45)
    return fail_note("H(0,0) drifted from zeta(3): " + hv);

  CliResult t = run_cli("eval t --r 0 --s 0 --route murakami --digits 50");
  if (t.status != 0) return fail_note("eval t exited " + std::to_string(t.status));
  std::string tv = parse_value_line(t.out);
  if (tv.empty()) return fail_note("eval t printed no value line");
  if (agree_digits(Real::parse(tv, ctx), Real::parse(refs::kT00, ctx)) < 45)
    return fail_note("T(0,0) drifted from (7/8) zeta(3): " + tv);
  return true;
}

// 2. Finite forms vs series forms everywhere on the 5x5 grid.
static bool route_quadrangle() {
  PrecisionContext ctx = make_context(50, 10);
  ConstantCache cache(ctx);
  Real slack = pow10(-45, ctx);
  for (int r = 0; r <= 4; ++r)
    for (int s = 0; s <= 4; ++s) {
      EvalResult hz = h_zagier(r, s, cache);
      EvalResult hl = h_lyh(r, s, cache);
      Real hbudget = Real::add_up(Real::add_up(hz.tail_bound, hl.tail_bound), slack);
      if (!((hz.value - hl.value).abs() <= hbudget))
        return fail_note("H routes split at r=" + std::to_string(r) + " s=" + std::to_string(s));

      EvalResult tm = t_murakami(r, s, cache);
      EvalResult tl = t_lyh(r, s, cache);
      Real tbudget = Real::add_up(Real::add_up(tm.tail_bound, tl.tail_bound), slack);
      if (!((tm.value - tl.value).abs() <= tbudget))
        return fail_note("T routes split at r=" + std::to_string(r) + " s=" + std::to_string(s));
    }
  return true;
}

// 3. Closed forms inside the truncated-sum bracket [V, V + tail] at N = 1e5.
static bool oracle_containment() {
  PrecisionContext ctx = make_context(50, 10);
  ConstantCache cache(ctx);
  Real slack = pow10(-45, ctx);
  for (int r = 0; r <= 2; ++r)
    for (int s = 0; s <= 2; ++s) {
      std::string at = " at r=" + std::to_string(r) + " s=" + std::to_string(s);
      EvalResult hz = h_zagier(r, s, cache);
      EvalResult hd = mzv_direct(hoffman_index(r, s, IndexKind::zeta), 100000, ctx);
      if (!(hd.value - slack < hz.value && hz.value < hd.value + hd.tail_bound + slack))
        return fail_note("H escaped the oracle bracket" + at);

      EvalResult tm = t_murakami(r, s, cache);
      EvalResult td = tvalue_direct(hoffman_index(r, s, IndexKind::t), 100000, ctx);
      if (!(td.value - slack < tm.value && tm.value < td.value + td.tail_bound + slack))
        return fail_note("T escaped the oracle bracket" + at);
    }
  return true;
}

// 4. B and D: definition vs closed form, and the (2s+1)! rescaling bridges.
static bool intermediate_sums() {
  PrecisionContext ctx = make_context(50, 10);
  ConstantCache cache(ctx);
  Real slack = pow10(-50, ctx);
  for (int r = 0; r <= 4; ++r)
    for (int s = 0; s <= 4; ++s) {
      std::string at = " at r=" + std::to_string(r) + " s=" + std::to_string(s);
      Real fact = Real::of(factorial(2 * static_cast<unsigned long>(s) + 1), ctx);

      EvalResult bd = b_sum_definition(r, s, cache);
      EvalResult bc = b_sum_closed(r, s, cache);
      if (!((bd.value - bc.value).abs() <=
            Real::add_up(Real::add_up(bd.tail_bound, bc.tail_bound), slack)))
        return fail_note("B definition vs closed" + at);

      EvalResult dd = d_sum_definition(r, s, cache);
      EvalResult dc = d_sum_closed(r, s, cache);
      if (!((dd.value - dc.value).abs() <=
            Real::add_up(Real::add_up(dd.tail_bound, dc.tail_bound), slack)))
        return fail_note("D definition vs closed" + at);

      EvalResult a = a_series(r, s, cache);
      Real abudget =
          Real::add_up(Real::add_up(Real::mul_up(a.tail_bound, fact), bd.tail_bound), slack);
      if (!((a.value * fact - bd.value).abs() <= abudget))
        return fail_note("(2s+1)! A vs B" + at);

      EvalResult c = c_series(r, s, cache);
      Real cbudget =
          Real::add_up(Real::add_up(Real::mul_up(c.tail_bound, fact), dd.tail_bound), slack);
      if (!((c.value * fact - dd.value).abs() <= cbudget))
        return fail_note("(2s+1)! C vs D" + at);
    }
  return true;
}

// 5. L(p) routes agree for p = 1..12; L(1) = -log(2)/2.
static bool lupu_lemma() {
  PrecisionContext ctx = make_context(50, 10);
  ConstantCache cache(ctx);
  Real threshold = pow10(-40, ctx);
  for (long p = 1; p <= 12; ++p) {
    EvalResult direct = lupu_series_direct(p, cache);
    EvalResult closed = lupu_closed_form(p, cache);
    if (!((direct.value - closed.value).abs() < threshold))
      return fail_note("L routes split at p=" + std::to_string(p));
  }
  Real target = cache.log2() / Real::of(-2, ctx);
  if (agree_digits(lupu_closed_form(1, cache).value, target) < 45)
    return fail_note("L(1) drifted from -log(2)/2");
  return true;
}

// 6. The exact rational battery at its documented bounds, zero failures.
static bool exact_lemma_suite() {
  ExactCheckBounds bounds;  // pf 12, binomials r<=20 s<=10, shifted 10, delta 1000
  auto checks = run_exact_checks(bounds);
  long failed = 0;
  for (const auto& c : checks)
    if (!c.pass) {
      ++failed;
      std::cerr << "  FAIL " << c.family << " " << c.parameters << "\n";
    }
  if (failed) return fail_note(std::to_string(failed) + " exact checks failed");
  return checks.size() >= 1000;  // the battery must actually have run
}

// 7. Rescaled expansion K(r,s) = 2^(2r+2s+3) T(r,s).
static bool k_equivalence() {
  PrecisionContext ctx = make_context(50, 10);
  ConstantCache cache(ctx);
  Real threshold = pow10(-45, ctx);
  for (int r = 0; r <= 4; ++r)
    for (int s = 0; s <= 4; ++s) {
      Real k = k_murakami(r, s, cache).value;
      Real scaled = t_murakami(r, s, cache).value.mul_2exp(2L * (r + s) + 3);
      if (!((k - scaled).abs() < threshold))
        return fail_note("K mismatch at r=" + std::to_string(r) + " s=" + std::to_string(s));
    }
  return true;
}

// 8. Constant cross-checks: even zeta both ways, all-twos values vs the
// truncated sums.  The depth-0 products are empty and equal 1 exactly.
static bool constants_cross_checks() {
  PrecisionContext ctx = make_context(50, 10);
  ConstantCache cache(ctx);
  for (long n = 1; n <= 12; ++n)
    if (agree_digits(cache.zeta(2 * n), zeta_euler_maclaurin(2 * n, ctx)) != 50)
      return fail_note("zeta(" + std::to_string(2 * n) + ") routes split");

  if (!(cache.zeta_all_twos(0) == Real::of(1, ctx) && cache.t_all_twos(0) == Real::of(1, ctx)))
    return fail_note("depth-0 all-twos values are not exactly 1");

  for (int d = 1; d <= 3; ++d) {
    std::vector<int> twos(static_cast<size_t>(d), 2);
    EvalResult z = mzv_direct(Index(twos, IndexKind::zeta), 100000, ctx);
    Real zv = cache.zeta_all_twos(d);
    if (!(z.value < zv && zv < z.value + z.tail_bound))
      return fail_note("zeta all-twos escaped the bracket at depth " + std::to_string(d));

    EvalResult t = tvalue_direct(Index(twos, IndexKind::t), 100000, ctx);
    Real tv = cache.t_all_twos(d);
    if (!(t.value < tv && tv < t.value + t.tail_bound))
      return fail_note("t all-twos escaped the bracket at depth " + std::to_string(d));
  }
  return true;
}

// 9. Byte-identical reports modulo wall_time; mutation flips the exit code.
static bool determinism_and_exit_codes() {
  const std::string args =
      "verify grid --rmax 1 --smax 1 --digits 30 --routes zagier,lyh,b --cutoff 20000";
  CliResult first = run_cli(args);
  CliResult second = run_cli(args);
  if (first.status != 0 || second.status != 0)
    return fail_note("clean grid runs exited " + std::to_string(first.status) + " and " +
                     std::to_string(second.status));
  nlohmann::json a = nlohmann::json::parse(first.out);
  nlohmann::json b = nlohmann::json::parse(second.out);
  a.erase("wall_time");
  b.erase("wall_time");
  if (a.dump() != b.dump()) return fail_note("reports differ beyond wall_time");
  if (a["summary"]["failed"] != 0) return fail_note("clean grid reported failures");

  CliResult mutated = run_cli(
      "verify grid --rmax 1 --smax 1 --digits 30 --routes zagier,lyh --cutoff 20000 "
      "--mutate-zagier");
  if (mutated.status != 1)
    return fail_note("mutated grid exited " + std::to_string(mutated.status) + ", wanted 1");
  nlohmann::json m = nlohmann::json::parse(mutated.out);
  if (m["summary"]["failed"] == 0) return fail_note("mutated grid reported no failures");
  return true;
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: mzt_acceptance <path-to-cli>\n";
    return 2;
  }
  g_cli = argv[1];

  criterion(1, "base-case collapse", 1.0, base_case_collapse);
  criterion(2, "route quadrangle", 300.0, route_quadrangle);
  criterion(3, "oracle containment", 120.0, oracle_containment);
  criterion(4, "intermediate sums", 0.0, intermediate_sums);
  criterion(5, "lupu lemma", 10.0, lupu_lemma);
  criterion(6, "exact lemma suite", 0.0, exact_lemma_suite);
  criterion(7, "k equivalence", 0.0, k_equivalence);
  criterion(8, "constants cross-checks", 0.0, constants_cross_checks);
  criterion(9, "determinism and exit codes", 0.0, determinism_and_exit_codes);

  std::cout << "acceptance: " << g_passed << "/" << g_ran << " passed\n";
  return g_passed == g_ran ? 0 : 1;
}
