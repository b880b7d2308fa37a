#pragma once

#include <gmp.h>

#include <string>

namespace mzt {

// Exact fraction of arbitrary size, kept in canonical form (reduced, positive
// denominator).  All arithmetic is exact; division by zero throws
// std::domain_error.
class Rational {
 public:
  Rational();  // zero
  Rational(long numerator);
  Rational(long numerator, long denominator);
  Rational(const Rational& other);
  Rational(Rational&& other) noexcept;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept;
  ~Rational();

  // Accepts "p", "-p", or "p/q" in base 10.
  static Rational parse(const std::string& text);
  static Rational of_mpz(mpz_srcptr z);

  Rational operator-() const;
  Rational abs() const;
  Rational pow(unsigned long e) const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;

  Rational numerator() const;
  Rational denominator() const;

  // "p" when integral, "p/q" otherwise.
  std::string to_string() const;

  mpq_srcptr raw() const { return q_; }

 private:
  mpq_t q_;
};

}  // namespace mzt
