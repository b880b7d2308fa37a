#include "mzt/combinatorics.hpp"

#include <gmp.h>

#include <stdexcept>
#include <utility>

namespace mzt {

Rational binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: negative upper argument");
  if (k < 0 || k > n) return Rational(0);
  mpz_t z;
  mpz_init(z);
  mpz_bin_uiui(z, static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  Rational r = Rational::of_mpz(z);
  mpz_clear(z);
  return r;
}

Rational factorial(unsigned long n) {
  mpz_t z;
  mpz_init(z);
  mpz_fac_ui(z, n);
  Rational r = Rational::of_mpz(z);
  mpz_clear(z);
  return r;
}

std::vector<Rational> bernoulli_upto(unsigned long n) {
  std::vector<Rational> b;
  b.reserve(n + 1);
  b.emplace_back(1);
  for (unsigned long m = 1; m <= n; ++m) {
    Rational acc(0);
    for (unsigned long j = 0; j < m; ++j)
      acc += binomial(static_cast<long>(m) + 1, static_cast<long>(j)) * b[j];
    b.push_back(-acc / Rational(static_cast<long>(m) + 1));
  }
  return b;
}

Rational bernoulli(unsigned long n) { return bernoulli_upto(n)[n]; }

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  normalize();
}

void RationalPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial(std::vector<Rational>{c});
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t d) {
  std::vector<Rational> v(d + 1, Rational(0));
  v[d] = c;
  return RationalPolynomial(std::move(v));
}

std::size_t RationalPolynomial::degree() const {
  if (is_zero()) throw std::logic_error("polynomial: zero polynomial has no degree");
  return coeffs_.size() - 1;
}

Rational RationalPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) + b.coefficient(i);
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) - b.coefficient(i);
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return RationalPolynomial();
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::scaled(const Rational& c) const {
  std::vector<Rational> v(coeffs_);
  for (auto& x : v) x *= c;
  return RationalPolynomial(std::move(v));
}

bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  return true;
}

namespace {

// x + c
RationalPolynomial linear(long c) {
  return RationalPolynomial(std::vector<Rational>{Rational(c), Rational(1)});
}

}  // namespace

bool check_partial_fraction(int j, int m) {
  if (j < 1 || m <= j) throw std::domain_error("partial fraction: need 1 <= j < m");
  RationalPolynomial rhs;
  for (int i = j; i <= m; ++i) {
    Rational sign((i - j) % 2 == 0 ? 1 : -1);
    RationalPolynomial p = RationalPolynomial::constant(sign * binomial(m - j, i - j));
    for (int t = j; t <= m; ++t)
      if (t != i) p = p * linear(t);
    rhs = rhs + p;
  }
  rhs = rhs.scaled(Rational(1) / factorial(static_cast<unsigned long>(m - j)));
  return rhs == RationalPolynomial::constant(Rational(1));
}

namespace {

bool alternating_binomial_sum_matches(long r_top, long shift, int s, int k, long lo) {
  Rational lhs(0);
  for (long i = lo; i <= 2L * s + 1; ++i) {
    Rational term = binomial(2L * s + 1, i) * binomial(r_top + i + shift, 2L * k);
    lhs += (i % 2 == 0) ? term : -term;
  }
  return lhs == -binomial(r_top + shift, 2L * k - 2L * s - 1);
}

}  // namespace

bool check_binomial_identity_full(int r, int s, int k) {
  if (r < 1 || s < 1 || k < 1)
    throw std::domain_error("binomial identity: r, s, k must be positive");
  if (2 * k > r + 1 + 2 * s) throw std::domain_error("binomial identity: 2k exceeds r+1+2s");
  return alternating_binomial_sum_matches(r, 0, s, k, 0);
}

bool check_binomial_identity_tail(int r, int s, int k) {
  if (r < 1 || s < 1 || k < 1)
    throw std::domain_error("binomial identity: r, s, k must be positive");
  if (2 * k > r + 1 + 2 * s) throw std::domain_error("binomial identity: 2k exceeds r+1+2s");
  long lo = 2L * k - r;
  if (lo < 0) lo = 0;
  return alternating_binomial_sum_matches(r, 0, s, k, lo);
}

bool check_delta_filter(const std::vector<Rational>& values, std::size_t a) {
  if (a >= values.size()) throw std::out_of_range("delta filter: index outside the sequence");
  Rational sum(0);
  for (std::size_t k = 0; k < values.size(); ++k) sum += values[k] * Rational(k == a ? 1 : 0);
  return sum == values[a];
}

bool check_shifted_binomial_sum(int r, int s, int k, BinomialSumVariant variant, int shift) {
  if (r < 0 || s < 0) throw std::domain_error("shifted binomial sum: r, s must be nonnegative");
  if (shift != 1 && shift != 2) throw std::domain_error("shifted binomial sum: shift must be 1 or 2");
  if (k < 1 || k > r + s + 1)
    throw std::domain_error("shifted binomial sum: k must lie in [1, r+s+1]");
  long lo = 0;
  if (variant == BinomialSumVariant::tail) {
    lo = 2L * k - 2L * r - shift;
    if (lo < 0) lo = 0;
  }
  return alternating_binomial_sum_matches(2L * r, shift, s, k, lo);
}

}  // namespace mzt
