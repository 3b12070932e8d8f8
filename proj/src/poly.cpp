#include "qstirling/poly.hpp"

#include <stdexcept>

namespace qstirling {

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(Rational c) {
  Poly p;
  if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
  return p;
}

Poly Poly::monomial(std::size_t power, Rational c) {
  Poly p;
  if (c.is_zero()) return p;
  p.coeffs_.assign(power + 1, Rational(0));
  p.coeffs_[power] = std::move(c);
  return p;
}

Rational Poly::eval(const Rational& at) const {
  Rational acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(out));
}

Poly operator*(const Rational& c, const Poly& p) {
  if (c.is_zero()) return Poly();
  Poly r = p;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

std::vector<std::string> Poly::to_strings() const {
  if (coeffs_.empty()) return {"0"};
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_string());
  return out;
}

Poly poly_root_product(std::span<const Rational> roots) {
  Poly p = Poly::constant(Rational(1));
  for (const auto& r : roots) {
    Poly factor({-r, Rational(1)});  // x - r
    p = p * factor;
  }
  return p;
}

std::vector<Rational> newton_coefficients(const Poly& p, std::span<const Rational> nodes) {
  const int deg = p.degree();
  if (deg < 0) return {Rational(0)};
  if (static_cast<int>(nodes.size()) < deg) throw std::invalid_argument("basis too small");

  std::vector<Rational> cur(p.coefficients().begin(), p.coefficients().end());
  std::vector<Rational> result(static_cast<std::size_t>(deg) + 1, Rational(0));
  for (int k = 0; k < deg; ++k) {
    // Synthetic division of cur by (x - nodes[k]): remainder -> result[k].
    const Rational& a = nodes[static_cast<std::size_t>(k)];
    const std::size_t d = cur.size() - 1;
    std::vector<Rational> quot(d, Rational(0));
    Rational carry = cur[d];
    for (std::size_t j = d; j-- > 0;) {
      quot[j] = carry;
      carry = cur[j] + a * carry;
    }
    result[static_cast<std::size_t>(k)] = carry;
    cur = std::move(quot);
  }
  result[static_cast<std::size_t>(deg)] = cur[0];
  return result;
}

Poly poly_from_newton(std::span<const Rational> coeffs, std::span<const Rational> nodes) {
  if (coeffs.empty()) return Poly();
  Poly acc = Poly::constant(coeffs.back());
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
    Poly factor({-nodes[k], Rational(1)});
    acc = acc * factor + Poly::constant(coeffs[k]);
  }
  return acc;
}

}  // namespace qstirling
