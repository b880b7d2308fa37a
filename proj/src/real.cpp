#include "mzt/real.hpp"

#include <stdexcept>
#include <utility>

namespace mzt {

Real::Real(const PrecisionContext& ctx) : ctx_(ctx) {
  mpfr_init2(x_, ctx.working_bits);
  mpfr_set_zero(x_, 1);
}

Real::Real(const Real& other) : ctx_(other.ctx_) {
  mpfr_init2(x_, mpfr_get_prec(other.x_));
  mpfr_set(x_, other.x_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : ctx_(other.ctx_) {
  mpfr_init2(x_, MPFR_PREC_MIN);
  mpfr_swap(x_, other.x_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    ctx_ = other.ctx_;
    mpfr_set_prec(x_, mpfr_get_prec(other.x_));
    mpfr_set(x_, other.x_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    ctx_ = other.ctx_;
    mpfr_swap(x_, other.x_);
  }
  return *this;
}

Real::~Real() { mpfr_clear(x_); }

Real Real::of(long value, const PrecisionContext& ctx) {
  Real r(ctx);
  mpfr_set_si(r.x_, value, MPFR_RNDN);
  return r;
}

Real Real::of(const Rational& value, const PrecisionContext& ctx) {
  Real r(ctx);
  mpfr_set_q(r.x_, value.raw(), MPFR_RNDN);
  return r;
}

Real Real::parse(const std::string& decimal, const PrecisionContext& ctx) {
  Real r(ctx);
  if (decimal.empty() || mpfr_set_str(r.x_, decimal.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("real: cannot parse '" + decimal + "'");
  return r;
}

int Real::sign() const { return mpfr_sgn(x_); }

bool Real::is_zero() const { return mpfr_zero_p(x_) != 0; }

Real Real::operator-() const {
  Real r(ctx_);
  mpfr_neg(r.x_, x_, MPFR_RNDN);
  return r;
}

Real Real::abs() const {
  Real r(ctx_);
  mpfr_abs(r.x_, x_, MPFR_RNDN);
  return r;
}

Real Real::pow(unsigned long e) const {
  Real r(ctx_);
  mpfr_pow_ui(r.x_, x_, e, MPFR_RNDN);
  return r;
}

Real Real::mul_2exp(long e) const {
  Real r(ctx_);
  mpfr_mul_2si(r.x_, x_, e, MPFR_RNDN);
  return r;
}

namespace {

Real binary_op(const Real& a, const Real& b,
               int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t),
               mpfr_rnd_t rnd) {
  Real r(finer(a.context(), b.context()));
  op(r.raw(), a.raw(), b.raw(), rnd);
  return r;
}

}  // namespace

Real& Real::operator+=(const Real& other) { return *this = *this + other; }
Real& Real::operator-=(const Real& other) { return *this = *this - other; }
Real& Real::operator*=(const Real& other) { return *this = *this * other; }

Real operator+(const Real& a, const Real& b) { return binary_op(a, b, mpfr_add, MPFR_RNDN); }
Real operator-(const Real& a, const Real& b) { return binary_op(a, b, mpfr_sub, MPFR_RNDN); }
Real operator*(const Real& a, const Real& b) { return binary_op(a, b, mpfr_mul, MPFR_RNDN); }

Real operator/(const Real& a, const Real& b) {
  if (b.is_zero()) throw std::domain_error("real: division by zero");
  return binary_op(a, b, mpfr_div, MPFR_RNDN);
}

bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) == 0; }
bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }

Real Real::add_up(const Real& a, const Real& b) { return binary_op(a, b, mpfr_add, MPFR_RNDU); }
Real Real::mul_up(const Real& a, const Real& b) { return binary_op(a, b, mpfr_mul, MPFR_RNDU); }

std::string Real::to_decimal(int significant_digits) const {
  int digits = significant_digits > 0 ? significant_digits : ctx_.target_digits;
  if (mpfr_nan_p(x_)) return "nan";
  if (mpfr_inf_p(x_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";

  mpfr_exp_t e;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), x_, MPFR_RNDN);
  std::string m(raw);
  mpfr_free_str(raw);
  bool neg = !m.empty() && m[0] == '-';
  if (neg) m.erase(0, 1);

  // m holds `digits` mantissa characters; the value is 0.m * 10^e.
  std::string out;
  if (e > 0 && e <= digits) {
    out = m.substr(0, static_cast<size_t>(e));
    if (static_cast<size_t>(e) < m.size()) out += "." + m.substr(static_cast<size_t>(e));
  } else if (e <= 0 && e > -6) {
    out = "0." + std::string(static_cast<size_t>(-e), '0') + m;
  } else {
    out = m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
  }
  return neg ? "-" + out : out;
}

double Real::to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real pow10(long e, const PrecisionContext& ctx) {
  Real r(ctx);
  if (e >= 0) {
    mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e), MPFR_RNDN);
  } else {
    mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(-e), MPFR_RNDN);
    mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
  }
  return r;
}

int agree_digits(const Real& a, const Real& b) {
  const PrecisionContext& ctx = finer(a.context(), b.context());
  const int cap = ctx.target_digits;
  Real diff = (a - b).abs();
  if (diff.is_zero()) return cap;
  Real quotient = diff / max(Real::of(1, ctx), a.abs());

  // Quantize the quotient to cap significant decimal digits so values landing
  // exactly on a power-of-ten boundary compare with <= deterministically.
  mpfr_exp_t e;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(cap), quotient.raw(), MPFR_RNDN);
  std::string m(raw);
  mpfr_free_str(raw);
  bool boundary = m[0] == '1' && m.find_first_not_of('0', 1) == std::string::npos;
  long n = boundary ? 1 - static_cast<long>(e) : -static_cast<long>(e);
  if (n < 0) n = 0;
  if (n > cap) n = cap;
  return static_cast<int>(n);
}

std::string_view route_name(Route route) {
  switch (route) {
    case Route::direct: return "direct";
    case Route::lyh_series: return "lyh-series";
    case Route::zagier: return "zagier";
    case Route::murakami: return "murakami";
    case Route::lupu_direct: return "lupu-direct";
    case Route::lupu_closed: return "lupu-closed";
    case Route::b_def: return "b-def";
    case Route::b_closed: return "b-closed";
    case Route::d_def: return "d-def";
    case Route::d_closed: return "d-closed";
    case Route::constant: return "constant";
  }
  return "unknown";
}

EvalResult make_eval(Real value, Real tail_bound, Route route, std::uint64_t terms_used) {
  if (tail_bound.sign() < 0) throw std::logic_error("eval result: negative tail bound");
  if (terms_used == 0 && !tail_bound.is_zero())
    throw std::logic_error("eval result: terms_used 0 requires a zero tail bound");
  return EvalResult{std::move(value), std::move(tail_bound), route, terms_used};
}

}  // namespace mzt
