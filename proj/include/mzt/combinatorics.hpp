#pragma once

#include <cstddef>
#include <vector>

#include "mzt/rational.hpp"

namespace mzt {

// C(n, k) with zero extension: 0 whenever k < 0 or k > n.  A negative n is a
// caller bug and throws std::domain_error.
Rational binomial(long n, long k);

Rational factorial(unsigned long n);

// Bernoulli numbers B_0..B_n under the B_1 = -1/2 convention, via the
// recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0 with m >= 1.
std::vector<Rational> bernoulli_upto(unsigned long n);
Rational bernoulli(unsigned long n);

// Dense univariate polynomial with exact coefficients, coefficient i of x^i.
// Trailing zero coefficients are stripped; the zero polynomial has no
// coefficients and no degree.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);
  static RationalPolynomial constant(const Rational& c);
  // c * x^d
  static RationalPolynomial monomial(const Rational& c, std::size_t d);

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t degree() const;  // throws std::logic_error on the zero polynomial
  Rational coefficient(std::size_t i) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  RationalPolynomial scaled(const Rational& c) const;
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b);
  friend bool operator!=(const RationalPolynomial& a, const RationalPolynomial& b) {
    return !(a == b);
  }

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

// Verifies, as an identity between polynomials with both sides multiplied by
// prod_{i=j}^{m}(x+i), that
//   1 / prod_{i=j}^{m}(x+i)
//     == (1/(m-j)!) sum_{i=j}^{m} (-1)^{i-j} C(m-j, i-j) / (x+i).
// Requires 1 <= j < m.
bool check_partial_fraction(int j, int m);

// Alternating binomial sum against its closed form, for positive r, s, k with
// 2k <= r + 1 + 2s:
//   sum_{i=lo}^{2s+1} (-1)^i C(2s+1, i) C(r+i, 2k) == -C(r, 2k-2s-1)
// where lo = 0 for the full variant and lo = max(0, 2k-r) for the tail
// variant (the dropped head terms vanish under zero extension).
bool check_binomial_identity_full(int r, int s, int k);
bool check_binomial_identity_tail(int r, int s, int k);

// sum_k values[k] * [k == a] == values[a], evaluated literally.
// a out of range throws std::out_of_range.
bool check_delta_filter(const std::vector<Rational>& values, std::size_t a);

enum class BinomialSumVariant { full, tail };

// The same alternating sum with the upper binomial shifted, for r, s >= 0,
// shift in {1, 2} and 1 <= k <= r + s + 1:
//   sum_{i=lo}^{2s+1} (-1)^i C(2s+1, i) C(2r+i+shift, 2k)
//     == -C(2r+shift, 2k-2s-1)
// with lo = 0 (full) or lo = max(0, 2k-2r-shift) (tail).
bool check_shifted_binomial_sum(int r, int s, int k, BinomialSumVariant variant, int shift);

}  // namespace mzt
