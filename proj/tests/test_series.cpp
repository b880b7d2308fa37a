#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mzt/combinatorics.hpp"
#include "mzt/series.hpp"
#include "reference_values.hpp"

using namespace mzt;

namespace {

const PrecisionContext kCtx = make_context(50, 10);

Real ref(const char* digits) { return Real::parse(digits, kCtx); }

Real tiny() { return pow10(-50, kCtx); }

}  // namespace

TEST_CASE("L(1) collapses to -log(2)/2 on both routes") {
  ConstantCache cache(kCtx);
  Real target = cache.log2() / Real::of(-2, kCtx);
  EvalResult direct = lupu_series_direct(1, cache);
  CHECK((direct.value - target).abs() < direct.tail_bound + tiny());
  EvalResult closed = lupu_closed_form(1, cache);
  CHECK(agree_digits(closed.value, target) == 50);
  CHECK(closed.route == Route::lupu_closed);
  CHECK(direct.route == Route::lupu_direct);
}

TEST_CASE("L(2) matches the frozen reference") {
  ConstantCache cache(kCtx);
  EvalResult direct = lupu_series_direct(2, cache);
  CHECK((direct.value - ref(refs::kLupu2)).abs() <
        direct.tail_bound + pow10(-54, kCtx));
  EvalResult closed = lupu_closed_form(2, cache);
  CHECK(agree_digits(closed.value, ref(refs::kLupu2)) >= 49);
}

TEST_CASE("L(2) expansion identity: leading term plus n >= 1 remainder") {
  // L(2) = -1/4 + sum_{n>=1} zeta(2n) / ((2n+2) 4^n); check the n = 0 term
  // is exactly zeta(0)/2 = -1/4 by comparing one- and two-term truncations.
  ConstantCache cache(kCtx);
  EvalResult one = detail::lupu_series_truncated(2, cache, 1);
  CHECK(agree_digits(one.value, Real::of(Rational(-1, 4), kCtx)) == 50);
  EvalResult two = detail::lupu_series_truncated(2, cache, 2);
  Real second = cache.zeta(2) / Real::of(16, kCtx);
  CHECK(agree_digits(two.value - one.value, second) >= 48);
}

TEST_CASE("series and closed-form routes for L agree across p") {
  ConstantCache cache(kCtx);
  for (long p = 1; p <= 12; ++p) {
    EvalResult direct = lupu_series_direct(p, cache);
    EvalResult closed = lupu_closed_form(p, cache);
    Real budget = direct.tail_bound + tiny();
    CHECK((direct.value - closed.value).abs() < budget);
    CHECK(direct.terms_used > 0);
    CHECK(closed.tail_bound == Real::of(0, kCtx));
  }
  CHECK_THROWS_AS(lupu_series_direct(0, cache), std::domain_error);
  CHECK_THROWS_AS(lupu_series_direct(-3, cache), std::domain_error);
  CHECK_THROWS_AS(lupu_closed_form(0, cache), std::domain_error);
}

TEST_CASE("memoized L reads return the stored evaluation") {
  ConstantCache cache(kCtx);
  CHECK(!cache.cached_lupu(4).has_value());
  EvalResult first = lupu_series_direct(4, cache);
  REQUIRE(cache.cached_lupu(4).has_value());
  EvalResult again = lupu_series_direct(4, cache);
  CHECK(again.value.to_decimal() == first.value.to_decimal());
  CHECK(again.terms_used == first.terms_used);
}

TEST_CASE("fixed truncations obey the Cauchy property") {
  ConstantCache cache(kCtx);
  EvalResult c20 = detail::lupu_series_truncated(3, cache, 20);
  EvalResult c25 = detail::lupu_series_truncated(3, cache, 25);
  CHECK((c25.value - c20.value).abs() < c20.tail_bound);
  CHECK(c25.tail_bound < c20.tail_bound);
  EvalResult adaptive = lupu_series_direct(3, cache);
  CHECK((adaptive.value - c20.value).abs() < c20.tail_bound);

  EvalResult a20 = detail::a_series_truncated(1, 1, cache, 20);
  EvalResult a25 = detail::a_series_truncated(1, 1, cache, 25);
  CHECK((a25.value - a20.value).abs() < a20.tail_bound);

  EvalResult g20 = detail::c_series_truncated(1, 1, cache, 20);
  EvalResult g25 = detail::c_series_truncated(1, 1, cache, 25);
  CHECK((g25.value - g20.value).abs() < g20.tail_bound);
}

TEST_CASE("partial sums past n = 0 increase monotonically") {
  // Every n >= 1 term is positive, so truncations grow after the first term.
  ConstantCache cache(kCtx);
  Real prev = detail::lupu_series_truncated(5, cache, 1).value;
  for (long n = 2; n <= 12; ++n) {
    Real cur = detail::lupu_series_truncated(5, cache, n).value;
    CHECK(prev < cur);
    prev = cur;
  }
}

TEST_CASE("A(0,0) evaluates to -zeta(3)/(2 pi^2)") {
  ConstantCache cache(kCtx);
  Real target = cache.zeta(3) / (cache.pi() * cache.pi() * Real::of(-2, kCtx));
  EvalResult a = a_series(0, 0, cache);
  CHECK((a.value - target).abs() < a.tail_bound + tiny());
  CHECK(a.route == Route::lyh_series);
}

TEST_CASE("B and D closed forms at the origin reduce to single zeta terms") {
  ConstantCache cache(kCtx);
  Real pi2 = cache.pi() * cache.pi();
  EvalResult b = b_sum_closed(0, 0, cache);
  CHECK(agree_digits(b.value, cache.zeta(3) / (pi2 * Real::of(-2, kCtx))) == 50);
  EvalResult d = d_sum_closed(0, 0, cache);
  Real dtarget = cache.zeta(3) * Real::of(Rational(-7, 4), kCtx) / pi2;
  CHECK(agree_digits(d.value, dtarget) == 50);
  CHECK(b.route == Route::b_closed);
  CHECK(d.route == Route::d_closed);
}

TEST_CASE("definition and closed form agree for B and D on a small grid") {
  ConstantCache cache(kCtx);
  for (int r = 0; r <= 3; ++r)
    for (int s = 0; s <= 3; ++s) {
      EvalResult def_b = b_sum_definition(r, s, cache);
      EvalResult closed_b = b_sum_closed(r, s, cache);
      CHECK((def_b.value - closed_b.value).abs() < def_b.tail_bound + tiny());
      CHECK(def_b.route == Route::b_def);

      EvalResult def_d = d_sum_definition(r, s, cache);
      EvalResult closed_d = d_sum_closed(r, s, cache);
      CHECK((def_d.value - closed_d.value).abs() < def_d.tail_bound + tiny());
      CHECK(def_d.route == Route::d_def);
    }
}

TEST_CASE("B and D rescale the A and C series by (2s+1)!") {
  ConstantCache cache(kCtx);
  for (int r = 0; r <= 2; ++r)
    for (int s = 0; s <= 2; ++s) {
      Real fact = Real::of(factorial(static_cast<unsigned long>(2 * s + 1)), kCtx);
      EvalResult a = a_series(r, s, cache);
      EvalResult b = b_sum_definition(r, s, cache);
      Real budget = Real::mul_up(fact, a.tail_bound) + b.tail_bound + tiny();
      CHECK((a.value * fact - b.value).abs() < budget);

      EvalResult c = c_series(r, s, cache);
      EvalResult d = d_sum_definition(r, s, cache);
      Real dbudget = Real::mul_up(fact, c.tail_bound) + d.tail_bound + tiny();
      CHECK((c.value * fact - d.value).abs() < dbudget);
    }
}

TEST_CASE("series domain errors") {
  ConstantCache cache(kCtx);
  CHECK_THROWS_AS(a_series(-1, 0, cache), std::domain_error);
  CHECK_THROWS_AS(c_series(0, -1, cache), std::domain_error);
  CHECK_THROWS_AS(b_sum_definition(-1, 0, cache), std::domain_error);
  CHECK_THROWS_AS(d_sum_closed(0, -2, cache), std::domain_error);
  CHECK_THROWS_AS(detail::lupu_series_truncated(3, cache, 0), std::domain_error);
}
