#pragma once

#include <span>
#include <string>
#include <vector>

#include "qstirling/rational.hpp"

namespace qstirling {

/**
 * Dense univariate polynomial with Rational coefficients.
 *
 * Invariant: the highest stored coefficient is nonzero; the zero polynomial
 * stores no coefficients (degree() == -1).
 */
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly constant(Rational c);
  static Poly monomial(std::size_t power, Rational c = Rational(1));
  static Poly x() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  // Coefficient of x^i; zero beyond the stored degree.
  Rational coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }
  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational eval(const Rational& at) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Dense coefficient strings, index = power ("0" for the zero polynomial).
  std::vector<std::string> to_strings() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

inline Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

// prod_j (x - roots[j]); the empty product is the constant 1.
Poly poly_root_product(std::span<const Rational> roots);

/**
 * Coefficients (a_0..a_d) of p in the generalized Newton basis
 *   p(x) = sum_k a_k * prod_{i<k} (x - nodes[i]),
 * computed by successive synthetic division. Needs nodes.size() >= degree(p);
 * throws std::invalid_argument("basis too small") otherwise. Repeated nodes
 * are fine. The zero polynomial yields {0}.
 */
std::vector<Rational> newton_coefficients(const Poly& p, std::span<const Rational> nodes);

// Inverse of newton_coefficients: rebuilds the Poly from Newton coefficients.
Poly poly_from_newton(std::span<const Rational> coeffs, std::span<const Rational> nodes);

}  // namespace qstirling
