#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qstirling/poly.hpp"
#include "qstirling/psi.hpp"
#include "qstirling/verdict.hpp"

namespace qstirling {

/**
 * A linear operator on polynomials: an immutable pure transformation plus a
 * symbolic descriptor. Operators capture only immutable parameters, so
 * application is safe from any thread.
 */
class PolyOperator {
 public:
  PolyOperator(std::string descriptor, std::function<Poly(const Poly&)> action)
      : descriptor_(std::move(descriptor)), action_(std::move(action)) {}

  Poly operator()(const Poly& p) const { return action_(p); }
  const std::string& descriptor() const { return descriptor_; }

  static PolyOperator identity();
  PolyOperator pow(int n) const;  // n-fold composition, n >= 0

 private:
  std::string descriptor_;
  std::function<Poly(const Poly&)> action_;
};

PolyOperator compose(PolyOperator outer, PolyOperator inner);
PolyOperator operator+(PolyOperator a, PolyOperator b);
PolyOperator scale(Rational c, PolyOperator op);

// d_psi: x^n -> n_psi x^{n-1} (the Jackson q-derivative when seq is q-Gauss).
PolyOperator psi_derivative(const PsiSequence& seq);

// f(x) -> f(qx).
PolyOperator q_dilation(const Rational& q);

// p(x) -> x p(x).
PolyOperator mult_by_x();

// (x d_q)^n == sum_k {n,k}_q x^k d_q^k, applied to monomials x^m, m <= m_max.
// Exact check; verifying it at integer arguments is the Carlitz basis
// expansion of m_q^n as well.
IdentityVerdict verify_weyl_expansion(const Rational& q, int n, int m_max);

// d_q(f g) == (d_q f) g + f(qx) (d_q g) on a deterministic pseudorandom
// battery of polynomial pairs up to the given degree.
IdentityVerdict q_leibnitz_check(const Rational& q, int deg);

// The linear functional with L(falling factorial) = 1, applied to a
// coefficient vector in the classical falling-factorial basis.
Rational rota_functional(std::span<const Rational> falling_basis_coords);

// Convenience wrapper: converts a monomial-basis Poly via Newton coefficients
// at the classical nodes 0,1,2,... and applies the functional.
Rational rota_of_poly(const Poly& p);

// A_0 = 1, A_n = y (1 + d_psi) A_{n-1}; equals the row-sum polynomials of the
// tilde2 triangle.
std::vector<Poly> exponential_polys_by_operator(const PsiSequence& seq, int max_n);

// L(X(X+q-1)...(X+q^{n-1}-1)) via falling-basis expansion; equals the cigl2
// row sum for each n.
Rational cigl_dobinski_exact(const Rational& q, int n);

}  // namespace qstirling
