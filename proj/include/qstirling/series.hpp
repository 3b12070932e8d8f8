#pragma once

#include <vector>

#include "qstirling/poly.hpp"
#include "qstirling/rational.hpp"

namespace qstirling {

/**
 * Truncated formal power series: exact coefficients of x^0..x^N.
 * All arithmetic is exact on coefficients 0..N and never reads beyond
 * order N of its inputs.
 */
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1, Rational(0)) {}
  explicit TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Rational(0));
  }
  static TruncatedSeries from_poly(const Poly& p, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(std::size_t i) const { return coeffs_[i]; }
  Rational& coeff(std::size_t i) { return coeffs_[i]; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  // Product truncated to min(order a, order b).
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
};

// exp(s) up to order(s), via the differential recurrence. The constant term
// of s must be zero (anything else would need a transcendental constant).
TruncatedSeries series_exp(const TruncatedSeries& s);

// outer(inner(x)) up to the shared order. inner must have zero constant term.
TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

// 1/s up to order(s); requires a nonzero constant term.
TruncatedSeries series_inverse(const TruncatedSeries& s);

}  // namespace qstirling
