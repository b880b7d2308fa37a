#include "mzt/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "mzt/closed_forms.hpp"
#include "mzt/combinatorics.hpp"
#include "mzt/constants.hpp"
#include "mzt/direct.hpp"
#include "mzt/errors.hpp"
#include "mzt/series.hpp"

namespace mzt {

ReportSummary VerificationReport::summary() const {
  ReportSummary s{0, 0, 0};
  for (const auto& r : records) {
    ++s.total;
    r.pass ? ++s.passed : ++s.failed;
  }
  for (const auto& c : exact_checks) {
    ++s.total;
    c.pass ? ++s.passed : ++s.failed;
  }
  return s;
}

std::string grid_route_name(GridRoute route) {
  switch (route) {
    case GridRoute::zagier: return "zagier";
    case GridRoute::lyh: return "lyh";
    case GridRoute::direct: return "direct";
    case GridRoute::murakami: return "murakami";
    case GridRoute::t_lyh: return "t-lyh";
    case GridRoute::t_direct: return "t-direct";
    case GridRoute::k_equiv: return "k-equiv";
    case GridRoute::b: return "b";
    case GridRoute::d: return "d";
  }
  return "unknown";
}

namespace {

const std::vector<GridRoute> kAllRoutes = {
    GridRoute::zagier, GridRoute::lyh,      GridRoute::direct,
    GridRoute::murakami, GridRoute::t_lyh,  GridRoute::t_direct,
    GridRoute::k_equiv, GridRoute::b,       GridRoute::d,
};

}  // namespace

std::set<GridRoute> parse_routes(const std::string& csv) {
  std::set<GridRoute> out;
  if (csv.empty() || csv == "all") {
    out.insert(kAllRoutes.begin(), kAllRoutes.end());
    return out;
  }
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    bool known = false;
    for (GridRoute r : kAllRoutes) {
      if (item == grid_route_name(r)) {
        out.insert(r);
        known = true;
        break;
      }
    }
    if (!known) throw ConfigError("unknown route '" + item + "'");
  }
  if (out.empty()) throw ConfigError("route list is empty");
  return out;
}

namespace {

std::string cell_suffix(int r, int s) {
  return " r=" + std::to_string(r) + " s=" + std::to_string(s);
}

// |lhs - rhs| <= tail(lhs) + tail(rhs) + 10^-target
ComparisonRecord diff_record(std::string label, const EvalResult& lhs, const EvalResult& rhs,
                             const PrecisionContext& ctx) {
  Real diff = (lhs.value - rhs.value).abs();
  Real budget =
      Real::add_up(Real::add_up(lhs.tail_bound, rhs.tail_bound), pow10(-ctx.target_digits, ctx));
  ComparisonRecord rec;
  rec.label = std::move(label);
  rec.lhs_route = std::string(route_name(lhs.route));
  rec.rhs_route = std::string(route_name(rhs.route));
  rec.lhs_value = lhs.value.to_decimal();
  rec.rhs_value = rhs.value.to_decimal();
  rec.abs_diff = diff.to_decimal();
  rec.budget = budget.to_decimal();
  rec.agree_digits = agree_digits(lhs.value, rhs.value);
  rec.pass = diff <= budget;
  return rec;
}

// The direct route underestimates: the limit lies in [V, V + tail].  Probe
// the closed value against the interval midpoint so the usual invariant
// |lhs - rhs'| <= budget still expresses containment.
ComparisonRecord containment_record(std::string label, const EvalResult& closed,
                                    const EvalResult& oracle, const PrecisionContext& ctx) {
  Real half_tail = oracle.tail_bound.mul_2exp(-1);
  Real midpoint = oracle.value + half_tail;
  Real diff = (closed.value - midpoint).abs();
  Real budget = Real::add_up(Real::add_up(half_tail, closed.tail_bound),
                             pow10(-ctx.target_digits, ctx));
  ComparisonRecord rec;
  rec.label = std::move(label);
  rec.lhs_route = std::string(route_name(closed.route));
  rec.rhs_route = std::string(route_name(oracle.route));
  rec.lhs_value = closed.value.to_decimal();
  rec.rhs_value = oracle.value.to_decimal();
  rec.abs_diff = diff.to_decimal();
  rec.budget = budget.to_decimal();
  rec.agree_digits = agree_digits(closed.value, oracle.value);
  rec.pass = diff <= budget;
  return rec;
}

}  // namespace

VerificationReport run_grid(const GridOptions& options, const PrecisionContext& ctx) {
  if (options.rmax < 0 || options.smax < 0) throw ConfigError("grid: rmax, smax must be >= 0");
  if (options.direct_terms < static_cast<long>(options.rmax) + options.smax + 1)
    throw ConfigError("grid: direct-term cutoff is below the deepest index");

  const auto t0 = std::chrono::steady_clock::now();
  std::set<GridRoute> routes = options.routes;
  if (routes.empty()) routes.insert(kAllRoutes.begin(), kAllRoutes.end());
  auto has = [&routes](GridRoute r) { return routes.count(r) != 0; };

  ConstantCache cache(ctx);

  // Populate shared constants before fanning out.
  const int wmax = options.rmax + options.smax + 1;
  cache.pi();
  cache.log2();
  for (int k = 1; k <= wmax; ++k) cache.zeta(2L * k + 1);
  for (int d = 0; d <= wmax; ++d) {
    cache.zeta_all_twos(d);
    cache.t_all_twos(d);
  }
  if (has(GridRoute::b) || has(GridRoute::d))
    for (long p = 1; p <= 2L * (options.rmax + options.smax) + 3; ++p)
      lupu_series_direct(p, cache);

  using TaskFn = std::function<ComparisonRecord()>;
  std::vector<TaskFn> tasks;

  for (int r = 0; r <= options.rmax; ++r) {
    for (int s = 0; s <= options.smax; ++s) {
      const bool mutate = options.mutate_zagier_sign && r == 0 && s == 0;
      auto h_closed = [&cache, r, s, mutate]() {
        return mutate ? h_zagier_mutated(r, s, cache, 1) : h_zagier(r, s, cache);
      };
      const long cutoff = options.direct_terms;

      if (has(GridRoute::zagier) && has(GridRoute::lyh))
        tasks.push_back([=, &cache]() {
          return diff_record("H zagier-vs-lyh" + cell_suffix(r, s), h_closed(), h_lyh(r, s, cache),
                             cache.context());
        });
      if (has(GridRoute::zagier) && has(GridRoute::direct))
        tasks.push_back([=, &cache]() {
          EvalResult oracle = mzv_direct(hoffman_index(r, s, IndexKind::zeta), cutoff,
                                         cache.context());
          return containment_record("H zagier-vs-direct" + cell_suffix(r, s), h_closed(), oracle,
                                    cache.context());
        });
      if (has(GridRoute::lyh) && has(GridRoute::direct))
        tasks.push_back([=, &cache]() {
          EvalResult oracle = mzv_direct(hoffman_index(r, s, IndexKind::zeta), cutoff,
                                         cache.context());
          return containment_record("H lyh-vs-direct" + cell_suffix(r, s), h_lyh(r, s, cache),
                                    oracle, cache.context());
        });
      if (has(GridRoute::murakami) && has(GridRoute::t_lyh))
        tasks.push_back([=, &cache]() {
          return diff_record("T murakami-vs-lyh" + cell_suffix(r, s), t_murakami(r, s, cache),
                             t_lyh(r, s, cache), cache.context());
        });
      if (has(GridRoute::murakami) && has(GridRoute::t_direct))
        tasks.push_back([=, &cache]() {
          EvalResult oracle =
              tvalue_direct(hoffman_index(r, s, IndexKind::t), cutoff, cache.context());
          return containment_record("T murakami-vs-direct" + cell_suffix(r, s),
                                    t_murakami(r, s, cache), oracle, cache.context());
        });
      if (has(GridRoute::t_lyh) && has(GridRoute::t_direct))
        tasks.push_back([=, &cache]() {
          EvalResult oracle =
              tvalue_direct(hoffman_index(r, s, IndexKind::t), cutoff, cache.context());
          return containment_record("T lyh-vs-direct" + cell_suffix(r, s), t_lyh(r, s, cache),
                                    oracle, cache.context());
        });
      if (has(GridRoute::k_equiv))
        tasks.push_back([=, &cache]() {
          EvalResult lhs = k_murakami(r, s, cache);
          EvalResult t = t_murakami(r, s, cache);
          EvalResult rhs = make_eval(t.value.mul_2exp(2L * (r + s) + 3),
                                     t.tail_bound.mul_2exp(2L * (r + s) + 3), t.route,
                                     t.terms_used);
          return diff_record("K equivalence" + cell_suffix(r, s), lhs, rhs, cache.context());
        });
      if (has(GridRoute::b)) {
        tasks.push_back([=, &cache]() {
          return diff_record("B def-vs-closed" + cell_suffix(r, s), b_sum_definition(r, s, cache),
                             b_sum_closed(r, s, cache), cache.context());
        });
        tasks.push_back([=, &cache]() {
          EvalResult a = a_series(r, s, cache);
          Real scale = Real::of(factorial(2 * static_cast<unsigned long>(s) + 1), cache.context());
          EvalResult scaled = make_eval(a.value * scale, Real::mul_up(a.tail_bound, scale),
                                        a.route, a.terms_used);
          return diff_record("B series-vs-def" + cell_suffix(r, s), scaled,
                             b_sum_definition(r, s, cache), cache.context());
        });
      }
      if (has(GridRoute::d)) {
        tasks.push_back([=, &cache]() {
          return diff_record("D def-vs-closed" + cell_suffix(r, s), d_sum_definition(r, s, cache),
                             d_sum_closed(r, s, cache), cache.context());
        });
        tasks.push_back([=, &cache]() {
          EvalResult c = c_series(r, s, cache);
          Real scale = Real::of(factorial(2 * static_cast<unsigned long>(s) + 1), cache.context());
          EvalResult scaled = make_eval(c.value * scale, Real::mul_up(c.tail_bound, scale),
                                        c.route, c.terms_used);
          return diff_record("D series-vs-def" + cell_suffix(r, s), scaled,
                             d_sum_definition(r, s, cache), cache.context());
        });
      }
    }
  }

  std::vector<ComparisonRecord> records(tasks.size());
  unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(tasks.size()));
  if (workers <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) records[i] = tasks[i]();
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&]() {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= tasks.size()) return;
          records[i] = tasks[i]();
        }
      });
    for (auto& t : pool) t.join();
  }

  std::sort(records.begin(), records.end(),
            [](const ComparisonRecord& a, const ComparisonRecord& b) { return a.label < b.label; });

  VerificationReport report;
  report.context = ctx;
  report.rmax = options.rmax;
  report.smax = options.smax;
  for (GridRoute r : kAllRoutes)
    if (has(r)) report.routes.push_back(grid_route_name(r));
  report.direct_terms = options.direct_terms;
  report.records = std::move(records);
  report.wall_seconds["grid"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

namespace {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Product of all primes p with (p-1) | n, as the denominator theorem states.
Rational squarefree_denominator(unsigned long n) {
  Rational prod(1);
  for (unsigned long p = 2; p <= n + 1; ++p)
    if (is_prime(p) && n % (p - 1) == 0) prod *= Rational(static_cast<long>(p));
  return prod;
}

}  // namespace

std::vector<ExactCheckRecord> run_exact_checks(const ExactCheckBounds& bounds) {
  std::vector<ExactCheckRecord> out;

  for (int j = 1; j < bounds.pf_max; ++j)
    for (int m = j + 1; m <= bounds.pf_max; ++m)
      out.push_back(
          {"partial-fraction", "j=" + std::to_string(j) + " m=" + std::to_string(m),
           check_partial_fraction(j, m)});

  for (int r = 1; r <= bounds.bin_rmax; ++r)
    for (int s = 1; s <= bounds.bin_smax; ++s)
      for (int k = 1; 2 * k <= r + 1 + 2 * s; ++k) {
        std::string params =
            "r=" + std::to_string(r) + " s=" + std::to_string(s) + " k=" + std::to_string(k);
        out.push_back(
            {"binomial-identity-full", params, check_binomial_identity_full(r, s, k)});
        out.push_back(
            {"binomial-identity-tail", params, check_binomial_identity_tail(r, s, k)});
      }

  for (int r = 0; r <= bounds.shifted_max; ++r)
    for (int s = 0; s <= bounds.shifted_max; ++s)
      for (int k = 1; k <= r + s + 1; ++k)
        for (int shift = 1; shift <= 2; ++shift) {
          std::string params = "r=" + std::to_string(r) + " s=" + std::to_string(s) +
                               " k=" + std::to_string(k) + " shift=" + std::to_string(shift);
          out.push_back({"shifted-binomial-sum", params + " variant=full",
                         check_shifted_binomial_sum(r, s, k, BinomialSumVariant::full, shift)});
          out.push_back({"shifted-binomial-sum", params + " variant=tail",
                         check_shifted_binomial_sum(r, s, k, BinomialSumVariant::tail, shift)});
        }

  {
    std::vector<Rational> bern = bernoulli_upto(bounds.bern_max);
    for (unsigned long n = 3; n <= bounds.bern_max; n += 2)
      out.push_back({"bernoulli-odd-zero", "n=" + std::to_string(n), bern[n].is_zero()});
    for (unsigned long n = 2; n <= bounds.bern_max; n += 2)
      out.push_back({"von-staudt-clausen", "n=" + std::to_string(n),
                     bern[n].denominator() == squarefree_denominator(n)});
  }

  {
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000);
    std::uniform_int_distribution<size_t> len(1, 40);
    for (int c = 0; c < bounds.delta_cases; ++c) {
      size_t n = len(rng);
      std::vector<Rational> values;
      values.reserve(n);
      for (size_t i = 0; i < n; ++i) values.emplace_back(num(rng), den(rng));
      std::uniform_int_distribution<size_t> pick(0, n - 1);
      size_t a = pick(rng);
      out.push_back({"delta-filter", "case=" + std::to_string(c), check_delta_filter(values, a)});
    }
  }

  return out;
}

void emit_report(const VerificationReport& report, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::csv) {
    out << "label,lhs_route,rhs_route,lhs_value,rhs_value,abs_diff,budget,agree_digits,pass\n";
    for (const auto& r : report.records)
      out << r.label << ',' << r.lhs_route << ',' << r.rhs_route << ',' << r.lhs_value << ','
          << r.rhs_value << ',' << r.abs_diff << ',' << r.budget << ',' << r.agree_digits << ','
          << (r.pass ? "true" : "false") << '\n';
    return;
  }

  nlohmann::ordered_json j;
  j["context"] = {{"target_digits", report.context.target_digits},
                  {"guard_digits", report.context.guard_digits},
                  {"working_bits", report.context.working_bits}};
  if (report.rmax >= 0) {
    j["grid"] = {{"rmax", report.rmax},
                 {"smax", report.smax},
                 {"routes", report.routes},
                 {"direct_terms", report.direct_terms}};
  } else {
    j["grid"] = nullptr;
  }
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : report.records)
    j["records"].push_back({{"label", r.label},
                            {"lhs_route", r.lhs_route},
                            {"rhs_route", r.rhs_route},
                            {"lhs_value", r.lhs_value},
                            {"rhs_value", r.rhs_value},
                            {"abs_diff", r.abs_diff},
                            {"budget", r.budget},
                            {"agree_digits", r.agree_digits},
                            {"pass", r.pass}});
  j["exact_checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.exact_checks)
    j["exact_checks"].push_back(
        {{"family", c.family}, {"parameters", c.parameters}, {"pass", c.pass}});
  ReportSummary s = report.summary();
  j["summary"] = {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}};
  j["wall_time"] = report.wall_seconds;
  out << j.dump(2) << "\n";
}

}  // namespace mzt
