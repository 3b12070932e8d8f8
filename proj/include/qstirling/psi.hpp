#pragma once

#include <string>
#include <vector>

#include "qstirling/poly.hpp"
#include "qstirling/rational.hpp"

namespace qstirling {

enum class PsiFamily { classical, q_gauss, custom };

/**
 * An extended number sequence n -> n_psi (the "extended umbra"): 0_psi = 0 and
 * n_psi != 0 for n >= 1, so that psi-factorials stay invertible.
 *
 * Families: classical (n_psi = n), q-Gauss (n_psi = 1 + q + ... + q^{n-1},
 * computed by summation so q = 1 is not a singularity), and custom (finite,
 * explicitly supplied values for 1_psi, 2_psi, ...).
 *
 * Values and factorials are cached. Cache growth is not synchronized: grow a
 * sequence from one thread; once a prefix is computed, concurrent reads of it
 * are fine. All returned values are immutable.
 */
class PsiSequence {
 public:
  static PsiSequence classical();
  static PsiSequence q_gauss(Rational q);
  static PsiSequence custom(std::vector<Rational> values);

  // CLI grammar: "classical" | "q:<rational>" | "custom:<path>", where the
  // file holds a JSON array of rational strings for 1_psi, 2_psi, ...
  static PsiSequence parse(const std::string& spec);

  PsiFamily family() const { return family_; }
  const Rational& q() const;  // q-Gauss only
  // Canonical descriptor: "classical", "q:<r>", or "custom:[v1,v2,...]".
  const std::string& spec_string() const { return spec_; }

  // n_psi. Custom: n beyond the supplied range -> std::out_of_range;
  // n_psi = 0 for n >= 1 -> std::domain_error("degenerate psi sequence").
  Rational value(int n) const;

  // n_psi! = prod_{i=1..n} i_psi (0_psi! = 1).
  Rational factorial(int n) const;

  // n_psi! / (k_psi! (n-k)_psi!); 0 when k > n or k < 0.
  Rational binomial(int n, int k) const;

  // psi_k(x) = x (x - 1_psi) ... (x - [k-1]_psi); monic of degree k.
  Poly falling_poly(int k) const;

  // x (x + 1_psi) ... (x + [k-1]_psi).
  Poly rising_poly(int k) const;

  // First k nodes 0_psi, ..., (k-1)_psi.
  std::vector<Rational> nodes(int k) const;

  // True iff 1_psi..upto_psi are pairwise distinct (partial-fractions precondition).
  bool values_distinct(int upto) const;

 private:
  PsiSequence(PsiFamily f, Rational q, std::vector<Rational> values, std::string spec);
  void ensure(int n) const;

  PsiFamily family_;
  Rational q_;
  std::vector<Rational> custom_values_;  // 1_psi, 2_psi, ...
  std::string spec_;
  mutable std::vector<Rational> values_;      // values_[n] = n_psi
  mutable std::vector<Rational> factorials_;  // factorials_[n] = n_psi!
};

}  // namespace qstirling
