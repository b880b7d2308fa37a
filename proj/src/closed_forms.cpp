#include "mzt/closed_forms.hpp"

#include <stdexcept>

#include "mzt/combinatorics.hpp"
#include "mzt/series.hpp"

namespace mzt {

namespace {

void require_args(int k, int r, int s) {
  if (r < 0 || s < 0) throw std::domain_error("coefficient: r, s must be nonnegative");
  if (k < 1 || k > r + s + 1) throw std::domain_error("coefficient: k must lie in [1, r+s+1]");
}

}  // namespace

Rational zagier_coeff(int k, int r, int s) {
  require_args(k, r, s);
  Rational four_k = Rational(4).pow(static_cast<unsigned long>(k));
  Rational one_m = (four_k - Rational(1)) / four_k;  // 1 - 4^-k
  return binomial(2L * k, 2L * r + 2) - one_m * binomial(2L * k, 2L * s + 1);
}

Rational murakami_coeff(int k, int r, int s) {
  require_args(k, r, s);
  Rational four_k = Rational(4).pow(static_cast<unsigned long>(k));
  Rational one_m = (four_k - Rational(1)) / four_k;
  return binomial(2L * k, 2L * r + 1) + one_m * binomial(2L * k, 2L * s + 1);
}

namespace {

EvalResult h_zagier_impl(int r, int s, ConstantCache& cache, int flip_k) {
  if (r < 0 || s < 0) throw std::domain_error("closed form: r, s must be nonnegative");
  const PrecisionContext& ctx = cache.context();
  Real value(ctx);
  const int w = r + s + 1;
  for (int k = 1; k <= w; ++k) {
    Rational c = zagier_coeff(k, r, s) * Rational(2);
    if (k % 2 != 0) c = -c;
    if (k == flip_k) c = -c;
    value += Real::of(c, ctx) * cache.zeta(2L * k + 1) * cache.zeta_all_twos(w - k);
  }
  return make_eval(std::move(value), Real(ctx), Route::zagier, 0);
}

}  // namespace

EvalResult h_zagier(int r, int s, ConstantCache& cache) {
  return h_zagier_impl(r, s, cache, 0);
}

EvalResult h_zagier_mutated(int r, int s, ConstantCache& cache, int flip_k) {
  if (flip_k < 1 || flip_k > r + s + 1)
    throw std::domain_error("mutation: flip_k must name a coefficient");
  return h_zagier_impl(r, s, cache, flip_k);
}

EvalResult t_murakami(int r, int s, ConstantCache& cache) {
  if (r < 0 || s < 0) throw std::domain_error("closed form: r, s must be nonnegative");
  const PrecisionContext& ctx = cache.context();
  Real value(ctx);
  const int w = r + s + 1;
  for (int k = 1; k <= w; ++k) {
    Rational c = murakami_coeff(k, r, s) / Rational(4).pow(static_cast<unsigned long>(k));
    if (k % 2 == 0) c = -c;
    value += Real::of(c, ctx) * cache.zeta(2L * k + 1) * cache.t_all_twos(w - k);
  }
  return make_eval(std::move(value), Real(ctx), Route::murakami, 0);
}

EvalResult k_murakami(int r, int s, ConstantCache& cache) {
  if (r < 0 || s < 0) throw std::domain_error("closed form: r, s must be nonnegative");
  const PrecisionContext& ctx = cache.context();
  Real value(ctx);
  const int w = r + s + 1;
  for (int k = 1; k <= w; ++k) {
    Rational c = murakami_coeff(k, r, s) * Rational(2);
    if (k % 2 == 0) c = -c;
    // K(d) = 2^(2d) t({2}^d)
    Real big_k = cache.t_all_twos(w - k).mul_2exp(2L * (w - k));
    value += Real::of(c, ctx) * big_k * cache.zeta(2L * k + 1);
  }
  return make_eval(std::move(value), Real(ctx), Route::murakami, 0);
}

EvalResult h_lyh(int r, int s, ConstantCache& cache) {
  if (r < 0 || s < 0) throw std::domain_error("closed form: r, s must be nonnegative");
  const PrecisionContext& ctx = cache.context();
  EvalResult a = a_series(r, s, cache);
  Real factor = Real::of(Rational(4) / factorial(2 * static_cast<unsigned long>(r) + 2), ctx) *
                cache.pi().pow(2 * (static_cast<unsigned long>(r) + s + 1));
  Real value = -(factor * a.value);
  Real tail = Real::mul_up(factor, a.tail_bound);
  return make_eval(std::move(value), std::move(tail), Route::lyh_series, a.terms_used);
}

EvalResult t_lyh(int r, int s, ConstantCache& cache) {
  if (r < 0 || s < 0) throw std::domain_error("closed form: r, s must be nonnegative");
  const PrecisionContext& ctx = cache.context();
  EvalResult c = c_series(r, s, cache);
  const unsigned long w2 = 2 * (static_cast<unsigned long>(r) + s + 1);
  // 2 (pi/2)^(2r+2s+2) / (2r+1)!
  Real factor = Real::of(Rational(2) / factorial(2 * static_cast<unsigned long>(r) + 1), ctx) *
                cache.pi().pow(w2).mul_2exp(-static_cast<long>(w2));
  Real value = -(factor * c.value);
  Real tail = Real::mul_up(factor, c.tail_bound);
  return make_eval(std::move(value), std::move(tail), Route::lyh_series, c.terms_used);
}

}  // namespace mzt
