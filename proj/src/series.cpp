#include "qstirling/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qstirling {

TruncatedSeries TruncatedSeries::from_poly(const Poly& p, int order) {
  TruncatedSeries s(order);
  for (std::size_t i = 0; i <= static_cast<std::size_t>(order); ++i) s.coeffs_[i] = p.coeff(i);
  return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (int i = 0; i <= n; ++i)
    out.coeffs_[static_cast<std::size_t>(i)] =
        a.coeff(static_cast<std::size_t>(i)) + b.coeff(static_cast<std::size_t>(i));
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (int i = 0; i <= n; ++i)
    out.coeffs_[static_cast<std::size_t>(i)] =
        a.coeff(static_cast<std::size_t>(i)) - b.coeff(static_cast<std::size_t>(i));
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j)
      out.coeffs_[static_cast<std::size_t>(i + j)] +=
          a.coeff(static_cast<std::size_t>(i)) * b.coeff(static_cast<std::size_t>(j));
  return out;
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
  if (!s.coeff(0).is_zero())
    throw std::invalid_argument("series_exp requires a zero constant term");
  const int n = s.order();
  TruncatedSeries e(n);
  e.coeff(0) = Rational(1);
  // (n+1) e_{n+1} = sum_{j} (j+1) s_{j+1} e_{n-j}  (from E' = s'E)
  for (int m = 0; m < n; ++m) {
    Rational acc(0);
    for (int j = 0; j <= m; ++j)
      acc += Rational(j + 1) * s.coeff(static_cast<std::size_t>(j + 1)) *
             e.coeff(static_cast<std::size_t>(m - j));
    e.coeff(static_cast<std::size_t>(m + 1)) = acc / Rational(m + 1);
  }
  return e;
}

TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (!inner.coeff(0).is_zero())
    throw std::invalid_argument("series_compose requires inner constant term zero");
  const int n = std::min(outer.order(), inner.order());
  TruncatedSeries in(n);
  for (int i = 0; i <= n; ++i) in.coeff(static_cast<std::size_t>(i)) = inner.coeff(static_cast<std::size_t>(i));
  TruncatedSeries acc(n);
  acc.coeff(0) = outer.coeff(static_cast<std::size_t>(n));
  for (int k = n; k-- > 0;) {
    acc = acc * in;
    acc.coeff(0) += outer.coeff(static_cast<std::size_t>(k));
  }
  return acc;
}

TruncatedSeries series_inverse(const TruncatedSeries& s) {
  if (s.coeff(0).is_zero())
    throw std::invalid_argument("series_inverse requires a nonzero constant term");
  const int n = s.order();
  TruncatedSeries out(n);
  const Rational c0 = s.coeff(0).inverse();
  out.coeff(0) = c0;
  for (int m = 1; m <= n; ++m) {
    Rational acc(0);
    for (int j = 1; j <= m; ++j)
      acc += s.coeff(static_cast<std::size_t>(j)) * out.coeff(static_cast<std::size_t>(m - j));
    out.coeff(static_cast<std::size_t>(m)) = -c0 * acc;
  }
  return out;
}

}  // namespace qstirling
