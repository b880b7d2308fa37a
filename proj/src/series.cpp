#include "mzt/series.hpp"

#include <stdexcept>
#include <vector>

#include "mzt/combinatorics.hpp"

namespace mzt {

namespace {

// One family covers L, A and C: sum_{n>=0} zeta(2n) / (4^n prod_i (2n+c_i)).
// The pole offsets c_i are positive, so the denominators grow monotonically
// and zeta(2n) <= 2 gives the geometric tail bound
//   sum_{n>=N} <= 2 / (prod_i (2N+c_i) * 3 * 4^(N-1)).
struct SeriesShape {
  std::vector<long> offsets;
};

void tail_bound_at(mpfr_ptr out, const SeriesShape& shape, long n, mpfr_prec_t prec) {
  mpfr_t tmp;
  mpfr_init2(tmp, prec);
  mpfr_set_ui(out, 2, MPFR_RNDU);
  mpfr_div_ui(out, out, 3, MPFR_RNDU);
  mpfr_ui_pow_ui(tmp, 4, static_cast<unsigned long>(n - 1), MPFR_RNDD);
  mpfr_div(out, out, tmp, MPFR_RNDU);
  for (long c : shape.offsets)
    mpfr_div_ui(out, out, static_cast<unsigned long>(2 * n + c), MPFR_RNDU);
  mpfr_clear(tmp);
}

EvalResult sum_zeta_series(const SeriesShape& shape, Route route, ConstantCache& cache,
                           long forced_terms) {
  if (forced_terms != -1 && forced_terms < 1)
    throw std::domain_error("series: term count must be positive");
  const PrecisionContext& ctx = cache.context();
  const mpfr_prec_t prec = ctx.working_bits + 32;

  // Warm the even-zeta table past the expected cutoff in one shot:
  // the bound decays by 4 per term, so ~log4(10^(target+2)) terms suffice.
  long hint = static_cast<long>((ctx.target_digits + 2) * 1.67) + 8;
  if (forced_terms > 0) hint = std::max(hint, forced_terms);
  cache.zeta(2 * hint);

  Real threshold = pow10(-(ctx.target_digits + 2), ctx);

  mpfr_t sum, term, bound;
  mpfr_init2(sum, prec);
  mpfr_init2(term, prec);
  mpfr_init2(bound, prec);
  mpfr_set_zero(sum, 1);

  long n = 0;
  for (;;) {
    if (forced_terms > 0) {
      if (n == forced_terms) break;
    } else if (n > 0) {
      tail_bound_at(bound, shape, n, prec);
      if (mpfr_cmp(bound, threshold.raw()) < 0) break;
    }
    Real z = cache.zeta(2 * n);
    mpfr_set(term, z.raw(), MPFR_RNDN);
    mpfr_div_2ui(term, term, 2 * static_cast<unsigned long>(n), MPFR_RNDN);  // / 4^n
    for (long c : shape.offsets)
      mpfr_div_ui(term, term, static_cast<unsigned long>(2 * n + c), MPFR_RNDN);
    mpfr_add(sum, sum, term, MPFR_RNDN);
    ++n;
  }
  tail_bound_at(bound, shape, n, prec);

  Real value(ctx);
  mpfr_set(value.raw(), sum, MPFR_RNDN);
  Real tail(ctx);
  mpfr_set(tail.raw(), bound, MPFR_RNDU);
  mpfr_clears(sum, term, bound, static_cast<mpfr_ptr>(nullptr));
  return make_eval(std::move(value), std::move(tail), route, static_cast<std::uint64_t>(n));
}

SeriesShape lupu_shape(long p) {
  if (p < 1) throw std::domain_error("lupu series: p must be positive");
  return SeriesShape{{p}};
}

SeriesShape a_shape(int r, int s) {
  if (r < 0 || s < 0) throw std::domain_error("series: r, s must be nonnegative");
  SeriesShape shape;
  for (long i = 2; i <= 2L * s + 3; ++i) shape.offsets.push_back(2L * r + i);
  return shape;
}

SeriesShape c_shape(int r, int s) {
  if (r < 0 || s < 0) throw std::domain_error("series: r, s must be nonnegative");
  SeriesShape shape;
  for (long i = 1; i <= 2L * s + 2; ++i) shape.offsets.push_back(2L * r + i);
  return shape;
}

}  // namespace

EvalResult lupu_series_direct(long p, ConstantCache& cache) {
  if (p < 1) throw std::domain_error("lupu series: p must be positive");
  if (auto hit = cache.cached_lupu(p)) return *hit;
  EvalResult r = sum_zeta_series(lupu_shape(p), Route::lupu_direct, cache, -1);
  cache.store_lupu(p, r);
  return r;
}

EvalResult lupu_closed_form(long p, ConstantCache& cache) {
  if (p < 1) throw std::domain_error("lupu closed form: p must be positive");
  const PrecisionContext& ctx = cache.context();
  Real value = Real::of(Rational(-1, 2), ctx) * cache.log2();
  Real pi_sq = cache.pi();
  pi_sq *= pi_sq;
  Real pipow = Real::of(1, ctx);  // pi^(2k)
  Rational p_fact = factorial(static_cast<unsigned long>(p));
  for (long k = 1; 2 * k <= p; ++k) {
    pipow *= pi_sq;
    Rational four_k = Rational(4).pow(static_cast<unsigned long>(k));
    Rational coeff = p_fact * (four_k - Rational(1)) /
                     (Rational(2) * factorial(static_cast<unsigned long>(p - 2 * k)) * four_k);
    if (k % 2 != 0) coeff = -coeff;
    value -= Real::of(coeff, ctx) * cache.zeta(2 * k + 1) / pipow;
  }
  if (p % 2 == 0) {
    // pi^p = pi^(2*(p/2)) is exactly the last pipow when the loop ran to p/2
    Rational coeff = p_fact / Rational(2);
    if ((p / 2) % 2 != 0) coeff = -coeff;
    value -= Real::of(coeff, ctx) * cache.zeta(p + 1) / pipow;
  }
  return make_eval(std::move(value), Real(ctx), Route::lupu_closed, 0);
}

EvalResult a_series(int r, int s, ConstantCache& cache) {
  return sum_zeta_series(a_shape(r, s), Route::lyh_series, cache, -1);
}

EvalResult c_series(int r, int s, ConstantCache& cache) {
  return sum_zeta_series(c_shape(r, s), Route::lyh_series, cache, -1);
}

EvalResult b_sum_definition(int r, int s, ConstantCache& cache) {
  if (r < 0 || s < 0) throw std::domain_error("series: r, s must be nonnegative");
  const PrecisionContext& ctx = cache.context();
  Real value(ctx);
  Real tail(ctx);
  std::uint64_t terms = 0;
  for (long i = 2; i <= 2L * s + 3; ++i) {
    Rational c = binomial(2L * s + 1, i - 2);
    if (i % 2 != 0) c = -c;
    EvalResult L = lupu_series_direct(2L * r + i, cache);
    value += Real::of(c, ctx) * L.value;
    tail = Real::add_up(tail, Real::mul_up(Real::of(c.abs(), ctx), L.tail_bound));
    terms += L.terms_used;
  }
  return make_eval(std::move(value), std::move(tail), Route::b_def, terms);
}

EvalResult d_sum_definition(int r, int s, ConstantCache& cache) {
  if (r < 0 || s < 0) throw std::domain_error("series: r, s must be nonnegative");
  const PrecisionContext& ctx = cache.context();
  Real value(ctx);
  Real tail(ctx);
  std::uint64_t terms = 0;
  for (long i = 1; i <= 2L * s + 2; ++i) {
    Rational c = binomial(2L * s + 1, i - 1);
    if (i % 2 == 0) c = -c;
    EvalResult L = lupu_series_direct(2L * r + i, cache);
    value += Real::of(c, ctx) * L.value;
    tail = Real::add_up(tail, Real::mul_up(Real::of(c.abs(), ctx), L.tail_bound));
    terms += L.terms_used;
  }
  return make_eval(std::move(value), std::move(tail), Route::d_def, terms);
}

namespace {

// Shared shell of the two closed forms; pick_c1 selects the first binomial.
EvalResult closed_combination(int r, int s, ConstantCache& cache, bool b_form) {
  if (r < 0 || s < 0) throw std::domain_error("series: r, s must be nonnegative");
  const PrecisionContext& ctx = cache.context();
  Real value(ctx);
  Real pi_sq = cache.pi();
  pi_sq *= pi_sq;
  Real pipow = Real::of(1, ctx);
  for (long k = 1; k <= static_cast<long>(r) + s + 1; ++k) {
    pipow *= pi_sq;
    Rational four_k = Rational(4).pow(static_cast<unsigned long>(k));
    Rational one_m = (four_k - Rational(1)) / four_k;  // 1 - 4^-k
    Rational c1 = b_form ? binomial(2L * r + 2, 2 * k - 2L * s - 1)
                         : binomial(2L * r + 1, 2 * k - 2L * s - 1);
    Rational c2 = b_form ? binomial(2L * s + 1, 2 * k - 2L * r - 2)
                         : binomial(2L * s + 1, 2 * k - 2L * r - 1);
    Rational bracket = b_form ? one_m * c1 - c2 : one_m * c1 + c2;
    Rational coeff =
        Rational(1, 2) * factorial(2 * static_cast<unsigned long>(k)) * bracket;
    if (k % 2 != 0) coeff = -coeff;
    value += Real::of(coeff, ctx) * cache.zeta(2 * k + 1) / pipow;
  }
  return make_eval(std::move(value), Real(ctx), b_form ? Route::b_closed : Route::d_closed, 0);
}

}  // namespace

EvalResult b_sum_closed(int r, int s, ConstantCache& cache) {
  return closed_combination(r, s, cache, true);
}

EvalResult d_sum_closed(int r, int s, ConstantCache& cache) {
  return closed_combination(r, s, cache, false);
}

namespace detail {

EvalResult lupu_series_truncated(long p, ConstantCache& cache, long terms) {
  return sum_zeta_series(lupu_shape(p), Route::lupu_direct, cache, terms);
}

EvalResult a_series_truncated(int r, int s, ConstantCache& cache, long terms) {
  return sum_zeta_series(a_shape(r, s), Route::lyh_series, cache, terms);
}

EvalResult c_series_truncated(int r, int s, ConstantCache& cache, long terms) {
  return sum_zeta_series(c_shape(r, s), Route::lyh_series, cache, terms);
}

}  // namespace detail

}  // namespace mzt
