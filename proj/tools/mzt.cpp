#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "mzt/closed_forms.hpp"
#include "mzt/constants.hpp"
#include "mzt/direct.hpp"
#include "mzt/errors.hpp"
#include "mzt/series.hpp"
#include "mzt/verify.hpp"

namespace {

void print_eval(const mzt::EvalResult& r) {
  std::cout << "value: " << r.value.to_decimal() << "\n"
            << "tail_bound: " << r.tail_bound.to_decimal() << "\n"
            << "route: " << mzt::route_name(r.route) << "\n"
            << "terms_used: " << r.terms_used << "\n";
}

int emit_to(const mzt::VerificationReport& report, mzt::ReportFormat format,
            const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    mzt::emit_report(report, format, std::cout);
    return std::cout ? 0 : 2;
  }
  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return 2;
  }
  mzt::emit_report(report, format, f);
  f.flush();
  if (!f) {
    std::cerr << "error: writing '" << out_path << "' failed\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cross-checked evaluation of nested zeta and t sums"};
  app.require_subcommand(1);
  int rc = 0;

  // verify ------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run verification batteries");
  verify->require_subcommand(1);

  auto* grid = verify->add_subcommand("grid", "compare evaluation routes over an (r,s) grid");
  int g_rmax = 4, g_smax = 4, g_digits = 50, g_guard = 10;
  long g_cutoff = 100000;
  unsigned g_threads = 0;
  std::string g_routes = "all", g_out = "-", g_format = "json";
  bool g_mutate = false;
  grid->add_option("--rmax", g_rmax, "largest r (default 4)");
  grid->add_option("--smax", g_smax, "largest s (default 4)");
  grid->add_option("--digits", g_digits, "target decimal digits (default 50)");
  grid->add_option("--guard", g_guard, "guard digits (default 10)");
  grid->add_option("--routes", g_routes,
                   "comma list of zagier,lyh,direct,murakami,t-lyh,t-direct,k-equiv,b,d or 'all'");
  grid->add_option("--out", g_out, "output path, '-' for stdout");
  grid->add_option("--format", g_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  grid->add_option("--cutoff", g_cutoff, "direct-sum term cutoff (default 100000)");
  grid->add_option("--threads", g_threads, "worker threads, 0 = hardware");
  grid->add_flag("--mutate-zagier", g_mutate,
                 "flip one closed-form coefficient sign at (0,0); the run must then fail");
  grid->callback([&]() {
    mzt::PrecisionContext ctx = mzt::make_context(g_digits, g_guard);
    mzt::GridOptions opt;
    opt.rmax = g_rmax;
    opt.smax = g_smax;
    opt.routes = mzt::parse_routes(g_routes);
    opt.direct_terms = g_cutoff;
    opt.threads = g_threads;
    opt.mutate_zagier_sign = g_mutate;
    mzt::VerificationReport report = mzt::run_grid(opt, ctx);
    mzt::ReportFormat fmt = g_format == "csv" ? mzt::ReportFormat::csv : mzt::ReportFormat::json;
    int io = emit_to(report, fmt, g_out);
    mzt::ReportSummary s = report.summary();
    std::cerr << "grid: " << s.total << " comparisons, " << s.failed << " failed\n";
    rc = io != 0 ? io : (s.failed ? 1 : 0);
  });

  auto* lemmas = verify->add_subcommand("lemmas", "run the exact (rational) check battery");
  mzt::ExactCheckBounds bounds;
  lemmas->add_option("--pf-max", bounds.pf_max, "partial fractions: largest m (default 12)");
  lemmas->add_option("--bin-rmax", bounds.bin_rmax, "binomial identities: largest r (default 20)");
  lemmas->add_option("--bin-smax", bounds.bin_smax, "binomial identities: largest s (default 10)");
  lemmas->add_option("--shifted-max", bounds.shifted_max,
                     "shifted binomial sums: largest r and s (default 10)");
  lemmas->add_option("--bern-max", bounds.bern_max, "bernoulli sweep: largest index (default 40)");
  lemmas->add_option("--delta-cases", bounds.delta_cases,
                     "randomized delta-filter cases (default 1000)");
  lemmas->callback([&]() {
    std::vector<mzt::ExactCheckRecord> checks = mzt::run_exact_checks(bounds);
    std::map<std::string, std::pair<long, long>> tally;  // family -> {passed, total}
    long failed = 0;
    for (const auto& c : checks) {
      auto& t = tally[c.family];
      ++t.second;
      if (c.pass) {
        ++t.first;
      } else {
        ++failed;
        std::cerr << "FAIL " << c.family << " " << c.parameters << "\n";
      }
    }
    for (const auto& [family, t] : tally)
      std::cout << family << ": " << t.first << "/" << t.second << " passed\n";
    std::cout << "total: " << (checks.size() - failed) << "/" << checks.size() << " passed\n";
    rc = failed ? 1 : 0;
  });

  // eval --------------------------------------------------------------
  auto* eval = app.add_subcommand("eval", "evaluate one quantity by one route");
  eval->require_subcommand(1);

  int e_r = 0, e_s = 0, e_digits = 50, e_guard = 10;
  long e_m = 2, e_p = 1, e_cutoff = 100000;
  std::string e_route;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--digits", e_digits, "target decimal digits (default 50)");
    cmd->add_option("--guard", e_guard, "guard digits (default 10)");
  };

  auto* eval_h = eval->add_subcommand("h", "zeta({2}^r,3,{2}^s)");
  eval_h->add_option("--r", e_r, "leading twos")->required();
  eval_h->add_option("--s", e_s, "trailing twos")->required();
  eval_h->add_option("--route", e_route, "zagier, lyh, or direct")
      ->default_val("zagier")
      ->check(CLI::IsMember({"zagier", "lyh", "direct"}));
  eval_h->add_option("--cutoff", e_cutoff, "direct-sum term cutoff (default 100000)");
  add_common(eval_h);
  eval_h->callback([&]() {
    mzt::PrecisionContext ctx = mzt::make_context(e_digits, e_guard);
    mzt::ConstantCache cache(ctx);
    if (e_route == "direct") {
      print_eval(mzt::mzv_direct(mzt::hoffman_index(e_r, e_s, mzt::IndexKind::zeta), e_cutoff, ctx));
    } else if (e_route == "lyh") {
      print_eval(mzt::h_lyh(e_r, e_s, cache));
    } else {
      print_eval(mzt::h_zagier(e_r, e_s, cache));
    }
  });

  auto* eval_t = eval->add_subcommand("t", "t({2}^r,3,{2}^s)");
  eval_t->add_option("--r", e_r, "leading twos")->required();
  eval_t->add_option("--s", e_s, "trailing twos")->required();
  eval_t->add_option("--route", e_route, "murakami, lyh, or direct")
      ->default_val("murakami")
      ->check(CLI::IsMember({"murakami", "lyh", "direct"}));
  eval_t->add_option("--cutoff", e_cutoff, "direct-sum term cutoff (default 100000)");
  add_common(eval_t);
  eval_t->callback([&]() {
    mzt::PrecisionContext ctx = mzt::make_context(e_digits, e_guard);
    mzt::ConstantCache cache(ctx);
    if (e_route == "direct") {
      print_eval(mzt::tvalue_direct(mzt::hoffman_index(e_r, e_s, mzt::IndexKind::t), e_cutoff, ctx));
    } else if (e_route == "lyh") {
      print_eval(mzt::t_lyh(e_r, e_s, cache));
    } else {
      print_eval(mzt::t_murakami(e_r, e_s, cache));
    }
  });

  auto* eval_zeta = eval->add_subcommand("zeta", "zeta(m) at integer m");
  eval_zeta->add_option("--m", e_m, "argument, 0 or >= 2")->required();
  add_common(eval_zeta);
  eval_zeta->callback([&]() {
    mzt::PrecisionContext ctx = mzt::make_context(e_digits, e_guard);
    mzt::ConstantCache cache(ctx);
    print_eval(mzt::make_eval(cache.zeta(e_m), mzt::Real(ctx), mzt::Route::constant, 0));
  });

  auto* eval_lupu = eval->add_subcommand("lupu", "L(p) = sum zeta(2n)/((2n+p) 4^n)");
  eval_lupu->add_option("--p", e_p, "pole offset, >= 1")->required();
  eval_lupu->add_option("--route", e_route, "direct or closed")
      ->default_val("direct")
      ->check(CLI::IsMember({"direct", "closed"}));
  add_common(eval_lupu);
  eval_lupu->callback([&]() {
    mzt::PrecisionContext ctx = mzt::make_context(e_digits, e_guard);
    mzt::ConstantCache cache(ctx);
    if (e_route == "closed") {
      print_eval(mzt::lupu_closed_form(e_p, cache));
    } else {
      print_eval(mzt::lupu_series_direct(e_p, cache));
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const mzt::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
