#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace qstirling {

/**
 * Exact arbitrary-precision rational number.
 *
 * Always stored reduced: denominator > 0 and gcd(|num|, den) == 1.
 * Every operation is exact; there is no floating point anywhere in the core.
 */
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long n) : num_(n), den_(1) {}       // NOLINT: implicit by design
  Rational(long long n) : num_(static_cast<long>(n)), den_(1) {}  // NOLINT
  Rational(int n) : num_(n), den_(1) {}        // NOLINT
  Rational(long n, long d) : num_(n), den_(d) { reduce(); }
  Rational(mpz_class n, mpz_class d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
  explicit Rational(mpz_class n) : num_(std::move(n)), den_(1) {}

  // Parses "p/q" or "p" with optional sign; throws std::invalid_argument on garbage.
  static Rational from_string(std::string_view s);

  const mpz_class& num() const { return num_; }
  const mpz_class& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on /0

  Rational abs() const;
  Rational inverse() const;  // throws std::domain_error on 0

  // Integer power; negative exponents invert (0 with negative exponent throws).
  Rational pow(long e) const;

  // "p/q" in lowest terms, "p" alone when q == 1.
  std::string to_string() const;

  // Fixed-point decimal with `digits` fractional digits, rounded half away
  // from zero. digits == 0 renders an integer.
  std::string to_decimal(int digits) const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp_(a, b) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp_(a, b) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp_(a, b) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp_(a, b) >= 0; }

 private:
  static int cmp_(const Rational& a, const Rational& b);
  void reduce();

  mpz_class num_;
  mpz_class den_;
};

Rational operator+(Rational a, const Rational& b);
Rational operator-(Rational a, const Rational& b);
Rational operator*(Rational a, const Rational& b);
Rational operator/(Rational a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace qstirling
