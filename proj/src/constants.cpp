#include "mzt/constants.hpp"

#include <stdexcept>

#include "mzt/combinatorics.hpp"

namespace mzt {

namespace {

constexpr int kPi = 0;
constexpr int kLog2 = 1;
constexpr int kZetaEven = 2;
constexpr int kZetaOdd = 3;
constexpr int kZetaAllTwos = 4;
constexpr int kTAllTwos = 5;

// sum_{j=a}^{b-1} e(j) / ((2j+1) q^(2j+1)) exactly, e(j) = (-1)^j when
// alternating.  Binary splitting keeps the intermediate fractions shallow.
void odd_power_range(mpq_t out, unsigned long q, bool alternating, long a, long b) {
  if (b - a <= 8) {
    mpq_set_ui(out, 0, 1);
    mpq_t term;
    mpq_init(term);
    mpz_t den;
    mpz_init(den);
    for (long j = a; j < b; ++j) {
      unsigned long odd = 2 * static_cast<unsigned long>(j) + 1;
      mpz_ui_pow_ui(den, q, odd);
      mpz_mul_ui(den, den, odd);
      mpq_set_ui(term, 1, 1);
      mpz_set(mpq_denref(term), den);
      if (alternating && (j & 1)) mpq_neg(term, term);
      mpq_add(out, out, term);
    }
    mpq_clear(term);
    mpz_clear(den);
    return;
  }
  long mid = a + (b - a) / 2;
  mpq_t hi;
  mpq_init(hi);
  odd_power_range(out, q, alternating, a, mid);
  odd_power_range(hi, q, alternating, mid, b);
  mpq_add(out, out, hi);
  mpq_clear(hi);
}

long floor_log2(unsigned long q) {
  long r = -1;
  while (q) {
    q >>= 1;
    ++r;
  }
  return r;
}

// atan(1/q) (alternating) or atanh(1/q) (not), truncated so the first omitted
// term is below 2^-(working_bits + 16); both series have that term as a tail
// bound (alternating directly, geometric ratio 1/q^2 <= 1/4 otherwise, which
// costs at most a factor 4/3).
void odd_power_series(mpq_t out, unsigned long q, bool alternating, long working_bits) {
  long terms = (working_bits + 16) / (2 * floor_log2(q)) + 4;
  odd_power_range(out, q, alternating, 0, terms);
}

// sum_{k=a}^{b-1} 1/(k 2^k)
void log2_range(mpq_t out, long a, long b) {
  if (b - a <= 8) {
    mpq_set_ui(out, 0, 1);
    mpq_t term;
    mpq_init(term);
    mpz_t den;
    mpz_init(den);
    for (long k = a; k < b; ++k) {
      mpz_ui_pow_ui(den, 2, static_cast<unsigned long>(k));
      mpz_mul_ui(den, den, static_cast<unsigned long>(k));
      mpq_set_ui(term, 1, 1);
      mpz_set(mpq_denref(term), den);
      mpq_add(out, out, term);
    }
    mpq_clear(term);
    mpz_clear(den);
    return;
  }
  long mid = a + (b - a) / 2;
  mpq_t hi;
  mpq_init(hi);
  log2_range(out, a, mid);
  log2_range(hi, mid, b);
  mpq_add(out, out, hi);
  mpq_clear(hi);
}

Real from_mpq(mpq_srcptr q, const PrecisionContext& ctx) {
  Real r(ctx);
  mpfr_set_q(r.raw(), q, MPFR_RNDN);
  return r;
}

}  // namespace

Real pi_machin(const PrecisionContext& ctx) {
  mpq_t a5, a239;
  mpq_init(a5);
  mpq_init(a239);
  odd_power_series(a5, 5, true, ctx.working_bits);
  odd_power_series(a239, 239, true, ctx.working_bits);
  mpq_t acc;
  mpq_init(acc);
  mpq_set_si(acc, 16, 1);
  mpq_mul(a5, a5, acc);
  mpq_set_si(acc, 4, 1);
  mpq_mul(a239, a239, acc);
  mpq_sub(acc, a5, a239);
  Real r = from_mpq(acc, ctx);
  mpq_clear(a5);
  mpq_clear(a239);
  mpq_clear(acc);
  return r;
}

Real pi_alternate(const PrecisionContext& ctx) {
  mpq_t a2, a3;
  mpq_init(a2);
  mpq_init(a3);
  odd_power_series(a2, 2, true, ctx.working_bits);
  odd_power_series(a3, 3, true, ctx.working_bits);
  mpq_add(a2, a2, a3);
  mpq_t four;
  mpq_init(four);
  mpq_set_si(four, 4, 1);
  mpq_mul(a2, a2, four);
  Real r = from_mpq(a2, ctx);
  mpq_clear(a2);
  mpq_clear(a3);
  mpq_clear(four);
  return r;
}

Real log2_geometric(const PrecisionContext& ctx) {
  mpq_t acc;
  mpq_init(acc);
  log2_range(acc, 1, ctx.working_bits + 8);
  Real r = from_mpq(acc, ctx);
  mpq_clear(acc);
  return r;
}

Real log2_atanh(const PrecisionContext& ctx) {
  mpq_t acc;
  mpq_init(acc);
  odd_power_series(acc, 3, false, ctx.working_bits);
  mpq_t two;
  mpq_init(two);
  mpq_set_si(two, 2, 1);
  mpq_mul(acc, acc, two);
  Real r = from_mpq(acc, ctx);
  mpq_clear(acc);
  mpq_clear(two);
  return r;
}

Real zeta_euler_maclaurin(long m, const PrecisionContext& ctx) {
  if (m < 2) throw std::domain_error("zeta: Euler-Maclaurin route needs m >= 2");
  const mpfr_prec_t scratch = ctx.working_bits + 64;
  const unsigned long um = static_cast<unsigned long>(m);

  // Full guard allowance: downstream closed forms scale zeta values by
  // coefficients whose 1-norm grows with the grid extent, so the constant
  // itself must land well below 10^-target.
  mpfr_t threshold;
  mpfr_init2(threshold, scratch);
  mpfr_ui_pow_ui(threshold, 10,
                 static_cast<unsigned long>(ctx.target_digits + ctx.guard_digits),
                 MPFR_RNDN);
  mpfr_ui_div(threshold, 1, threshold, MPFR_RNDN);

  long n = std::max(16L, ctx.working_bits / 4);
  const long m_depth = std::max(16L, ctx.working_bits / 4);
  std::vector<Rational> bern = bernoulli_upto(2 * static_cast<unsigned long>(m_depth));

  mpfr_t sum, tmp, npow, term;
  mpfr_init2(sum, scratch);
  mpfr_init2(tmp, scratch);
  mpfr_init2(npow, scratch);
  mpfr_init2(term, scratch);
  mpz_t rising, fact;
  mpz_init(rising);
  mpz_init(fact);
  mpq_t coeff;
  mpq_init(coeff);

  Real result(ctx);
  for (int attempt = 0;; ++attempt) {
    if (attempt > 24) throw std::logic_error("zeta: Euler-Maclaurin failed to converge");
    const unsigned long un = static_cast<unsigned long>(n);

    mpfr_set_zero(sum, 1);
    for (unsigned long k = 1; k < un; ++k) {
      mpfr_ui_pow_ui(tmp, k, um, MPFR_RNDN);
      mpfr_ui_div(tmp, 1, tmp, MPFR_RNDN);
      mpfr_add(sum, sum, tmp, MPFR_RNDN);
    }
    // N^(1-m)/(m-1) + N^(-m)/2
    mpfr_ui_pow_ui(tmp, un, um - 1, MPFR_RNDN);
    mpfr_ui_div(tmp, 1, tmp, MPFR_RNDN);
    mpfr_div_ui(tmp, tmp, static_cast<unsigned long>(m - 1), MPFR_RNDN);
    mpfr_add(sum, sum, tmp, MPFR_RNDN);
    mpfr_ui_pow_ui(tmp, un, um, MPFR_RNDN);
    mpfr_ui_div(tmp, 1, tmp, MPFR_RNDN);
    mpfr_div_ui(tmp, tmp, 2, MPFR_RNDN);
    mpfr_add(sum, sum, tmp, MPFR_RNDN);

    mpz_set_ui(rising, um);  // m(m+1)...(m+2j-2), starts at j = 1
    mpz_set_ui(fact, 2);     // (2j)!
    mpfr_ui_pow_ui(npow, un, um + 1, MPFR_RNDN);
    mpfr_ui_div(npow, 1, npow, MPFR_RNDN);  // N^(-m-2j+1), starts at j = 1

    bool converged = false;
    for (long j = 1; j <= m_depth; ++j) {
      if (j > 1) {
        mpz_mul_ui(rising, rising, um + 2 * static_cast<unsigned long>(j) - 3);
        mpz_mul_ui(rising, rising, um + 2 * static_cast<unsigned long>(j) - 2);
        mpz_mul_ui(fact, fact, 2 * static_cast<unsigned long>(j) - 1);
        mpz_mul_ui(fact, fact, 2 * static_cast<unsigned long>(j));
        mpfr_div_ui(npow, npow, un, MPFR_RNDN);
        mpfr_div_ui(npow, npow, un, MPFR_RNDN);
      }
      mpq_set(coeff, bern[2 * static_cast<size_t>(j)].raw());
      mpq_t rq;
      mpq_init(rq);
      mpq_set_z(rq, rising);
      mpq_mul(coeff, coeff, rq);
      mpq_set_z(rq, fact);
      mpq_div(coeff, coeff, rq);
      mpq_clear(rq);
      mpfr_mul_q(term, npow, coeff, MPFR_RNDN);
      mpfr_abs(tmp, term, MPFR_RNDN);
      if (mpfr_cmp(tmp, threshold) <= 0) {
        // remainder is bounded by the first omitted correction term
        converged = true;
        break;
      }
      mpfr_add(sum, sum, term, MPFR_RNDN);
    }
    if (converged) {
      mpfr_set(result.raw(), sum, MPFR_RNDN);
      break;
    }
    n *= 2;
  }

  mpfr_clears(threshold, sum, tmp, npow, term, static_cast<mpfr_ptr>(nullptr));
  mpz_clear(rising);
  mpz_clear(fact);
  mpq_clear(coeff);
  return result;
}

ConstantCache::ConstantCache(const PrecisionContext& ctx) : ctx_(ctx) {}

Real ConstantCache::get(int kind, long arg) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find({kind, arg});
    if (it != memo_.end()) return it->second;
  }
  Real v = compute(kind, arg);
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = memo_.try_emplace({kind, arg}, std::move(v));
  return it->second;
}

Real ConstantCache::compute(int kind, long arg) {
  switch (kind) {
    case kPi:
      return pi_machin(ctx_);
    case kLog2:
      return log2_geometric(ctx_);
    case kZetaOdd:
      return zeta_euler_maclaurin(arg, ctx_);
    case kZetaAllTwos: {
      Rational coeff = Rational(1) / factorial(2 * static_cast<unsigned long>(arg) + 1);
      return Real::of(coeff, ctx_) * pi().pow(2 * static_cast<unsigned long>(arg));
    }
    case kTAllTwos: {
      Rational coeff =
          Rational(1) / (factorial(2 * static_cast<unsigned long>(arg)) * Rational(4).pow(arg));
      return Real::of(coeff, ctx_) * pi().pow(2 * static_cast<unsigned long>(arg));
    }
    default:
      throw std::logic_error("constant cache: unknown kind");
  }
}

void ConstantCache::ensure_even_zetas(long m) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (memo_.count({kZetaEven, m})) return;
  }
  // Fill a whole block at once: the Bernoulli table is the expensive part.
  const long cap = ((m + 63) / 64) * 64;
  std::vector<Rational> bern = bernoulli_upto(static_cast<unsigned long>(cap));
  Real pi_sq = pi();
  pi_sq *= pi_sq;
  Real pipow = Real::of(1, ctx_);
  std::vector<std::pair<long, Real>> values;
  values.reserve(static_cast<size_t>(cap / 2));
  for (long k = 1; 2 * k <= cap; ++k) {
    pipow *= pi_sq;
    // zeta(2k) = (-1)^(k+1) B_2k (2 pi)^(2k) / (2 (2k)!)
    Rational coeff = bern[static_cast<size_t>(2 * k)] * Rational(2).pow(2 * k) /
                     (Rational(2) * factorial(2 * static_cast<unsigned long>(k)));
    if (k % 2 == 0) coeff = -coeff;
    values.emplace_back(2 * k, Real::of(coeff, ctx_) * pipow);
  }
  std::lock_guard<std::mutex> lock(mu_);
  for (auto& [arg, val] : values) memo_.try_emplace({kZetaEven, arg}, std::move(val));
}

Real ConstantCache::pi() { return get(kPi, 0); }

Real ConstantCache::log2() { return get(kLog2, 0); }

Real ConstantCache::zeta(long m) {
  if (m == 1 || m < 0) throw std::domain_error("zeta: argument must be 0 or >= 2");
  if (m == 0) return Real::of(Rational(-1, 2), ctx_);
  if (m % 2 == 0) {
    ensure_even_zetas(m);
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.at({kZetaEven, m});
  }
  return get(kZetaOdd, m);
}

Real ConstantCache::zeta_all_twos(long d) {
  if (d < 0) throw std::domain_error("zeta_all_twos: depth must be nonnegative");
  return get(kZetaAllTwos, d);
}

Real ConstantCache::t_all_twos(long d) {
  if (d < 0) throw std::domain_error("t_all_twos: depth must be nonnegative");
  return get(kTAllTwos, d);
}

std::optional<EvalResult> ConstantCache::cached_lupu(long p) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = lupu_memo_.find(p);
  if (it == lupu_memo_.end()) return std::nullopt;
  return it->second;
}

void ConstantCache::store_lupu(long p, const EvalResult& r) {
  std::lock_guard<std::mutex> lock(mu_);
  lupu_memo_.try_emplace(p, r);
}

}  // namespace mzt
