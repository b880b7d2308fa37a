#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "mzt/precision.hpp"
#include "mzt/rational.hpp"

namespace mzt {

// Arbitrary-precision real with value semantics, pinned to the working
// precision of its PrecisionContext.  Every operation rounds to nearest;
// mixed-precision operands produce a result in the finer context.
class Real {
 public:
  explicit Real(const PrecisionContext& ctx);  // zero
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real of(long value, const PrecisionContext& ctx);
  static Real of(const Rational& value, const PrecisionContext& ctx);
  // Base-10 literal, e.g. "-3.14e-2".  Throws std::invalid_argument on junk.
  static Real parse(const std::string& decimal, const PrecisionContext& ctx);

  const PrecisionContext& context() const { return ctx_; }

  int sign() const;
  bool is_zero() const;

  Real operator-() const;
  Real abs() const;
  Real pow(unsigned long e) const;
  Real mul_2exp(long e) const;  // *this * 2^e, exact

  Real& operator+=(const Real& other);
  Real& operator-=(const Real& other);
  Real& operator*=(const Real& other);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);  // /0 -> domain_error

  friend bool operator==(const Real& a, const Real& b);
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b);
  friend bool operator<=(const Real& a, const Real& b);
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator>=(const Real& a, const Real& b) { return b <= a; }

  // Round-up variants for tail-bound arithmetic: the result is never below
  // the exact sum/product.
  static Real add_up(const Real& a, const Real& b);
  static Real mul_up(const Real& a, const Real& b);

  // Decimal rendering with the given number of significant digits
  // (target_digits when 0).  Round-trips through parse() at target_digits.
  std::string to_decimal(int significant_digits = 0) const;
  double to_double() const;

  mpfr_srcptr raw() const { return x_; }
  mpfr_ptr raw() { return x_; }

 private:
  PrecisionContext ctx_;
  mpfr_t x_;
};

Real max(const Real& a, const Real& b);

// 10^e at the given context.
Real pow10(long e, const PrecisionContext& ctx);

// Number of agreeing significant decimal digits: the largest n with
// |a-b| / max(1,|a|) <= 10^-n after that quotient is quantized to the finer
// context's target_digits, clamped to [0, target_digits of the finer
// context].  Equal values score the clamp ceiling.
int agree_digits(const Real& a, const Real& b);

// Which formula produced an EvalResult.
enum class Route {
  direct,
  lyh_series,
  zagier,
  murakami,
  lupu_direct,
  lupu_closed,
  b_def,
  b_closed,
  d_def,
  d_closed,
  constant,
};

std::string_view route_name(Route route);

// Value of one evaluation together with a rigorous truncation bound.
// tail_bound covers omitted series terms only (working precision carries the
// rounding slack); it is zero for finite closed forms, which are also the
// only results allowed to report terms_used == 0.
struct EvalResult {
  Real value;
  Real tail_bound;
  Route route;
  std::uint64_t terms_used;
};

// Validates the EvalResult invariants (throws std::logic_error).
EvalResult make_eval(Real value, Real tail_bound, Route route, std::uint64_t terms_used);

}  // namespace mzt
