#include "mzt/rational.hpp"

#include <stdexcept>
#include <utility>

namespace mzt {

Rational::Rational() { mpq_init(q_); }

Rational::Rational(long numerator) {
  mpq_init(q_);
  mpq_set_si(q_, numerator, 1);
}

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational: zero denominator");
  mpq_init(q_);
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  mpq_set_si(q_, numerator, static_cast<unsigned long>(denominator));
  mpq_canonicalize(q_);
}

Rational::Rational(const Rational& other) {
  mpq_init(q_);
  mpq_set(q_, other.q_);
}

Rational::Rational(Rational&& other) noexcept {
  mpq_init(q_);
  mpq_swap(q_, other.q_);
}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) mpq_set(q_, other.q_);
  return *this;
}

Rational& Rational::operator=(Rational&& other) noexcept {
  if (this != &other) mpq_swap(q_, other.q_);
  return *this;
}

Rational::~Rational() { mpq_clear(q_); }

Rational Rational::parse(const std::string& text) {
  Rational r;
  if (mpq_set_str(r.q_, text.c_str(), 10) != 0)
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  if (mpz_sgn(mpq_denref(r.q_)) == 0)
    throw std::domain_error("rational: zero denominator");
  if (mpz_sgn(mpq_denref(r.q_)) < 0) {
    mpz_neg(mpq_numref(r.q_), mpq_numref(r.q_));
    mpz_neg(mpq_denref(r.q_), mpq_denref(r.q_));
  }
  mpq_canonicalize(r.q_);
  return r;
}

Rational Rational::of_mpz(mpz_srcptr z) {
  Rational r;
  mpq_set_z(r.q_, z);
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  mpq_neg(r.q_, q_);
  return r;
}

Rational Rational::abs() const {
  Rational r;
  mpq_abs(r.q_, q_);
  return r;
}

Rational Rational::pow(unsigned long e) const {
  Rational r;
  mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), e);
  mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), e);
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  mpq_add(q_, q_, other.q_);
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  mpq_sub(q_, q_, other.q_);
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  mpq_mul(q_, q_, other.q_);
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("rational: division by zero");
  mpq_div(q_, q_, other.q_);
  return *this;
}

bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }

bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }

int Rational::sign() const { return mpq_sgn(q_); }

bool Rational::is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

Rational Rational::numerator() const { return of_mpz(mpq_numref(q_)); }

Rational Rational::denominator() const { return of_mpz(mpq_denref(q_)); }

std::string Rational::to_string() const {
  char* raw = mpq_get_str(nullptr, 10, q_);
  std::string s(raw);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(raw, s.size() + 1);
  return s;
}

}  // namespace mzt
