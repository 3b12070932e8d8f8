#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qstirling/psi.hpp"
#include "qstirling/rational.hpp"
#include "qstirling/verdict.hpp"

namespace qstirling {

enum class BellFamily { classical, tilde, carlitz_q, cigl };

struct BellSequence {
  BellFamily family;
  std::string params;
  std::vector<Rational> values;  // index n

  std::string to_csv() const;
  std::string to_json() const;
};

/**
 * A truncated-series evaluation: exact partial sum plus an exact bound on the
 * part that was cut off. tail_bound == nullopt marks the +infinity case
 * (outer terms were not eventually decreasing, so nothing was bounded).
 * The interval [partial_sum - tail_bound, partial_sum + tail_bound] reflects
 * exactly the truncation performed.
 */
struct ApproxValue {
  Rational partial_sum;
  std::optional<Rational> tail_bound;
  long terms_used = 0;

  bool bounded() const { return tail_bound.has_value(); }
  // {"partial_sum","tail_bound","terms_used","decimal"} per the CLI contract.
  nlohmann::ordered_json to_json(int decimal_digits) const;
};

// B~_n(psi) = row sums of the tilde2 triangle, n = 0..max_n.
BellSequence bell_tilde(const PsiSequence& seq, int max_n);

// B_q(n+1) = sum_l (n l)_q q^l B_q(l), B_q(0) = 1. A claimed identity links
// this to carlitz2 row sums; the harness adjudicates it.
BellSequence bell_carlitz_by_recurrence(const Rational& q, int max_n);

// Row sums of cigl2; equals cigl_dobinski_exact for each n.
BellSequence bell_cigl(const Rational& q, int max_n);

enum class DobinskiConvention { weight_times, weight_divides };

/**
 * eps(psi, r) = sum_{k>=r} (-1)^{k-r} / (k-r)_psi!, truncated when the next
 * term drops below tol (alternating bound; needs the psi-factorials to keep
 * growing, which is checked over the truncation window). With q17_factor on,
 * the whole sum is multiplied by q^{-C(r,2)} (q-Gauss and classical only).
 */
ApproxValue epsilon_weight(const PsiSequence& seq, int r, const Rational& tol,
                           bool q17_factor = false, long term_cap = 10000);

/**
 * Dobinski-type series for B~_n(psi): sum_r w_r r_psi^n / r_psi! with
 * w_r = eps(psi,r) (weight_times) or 1/eps(psi,r) (weight_divides, the
 * convention as printed). Each eps is evaluated to tol/(4 r_cap); tail_bound
 * aggregates the inner truncation errors and the outer geometric bound.
 */
ApproxValue dobinski_sum(const PsiSequence& seq, int n, DobinskiConvention convention,
                         const Rational& tol, int r_cap, bool q17_factor = false);

// Numeric route for the cigl-q-Dobinski value: (truncated 1/e) * sum_r p_n(r)/r!
// with p_n the Cigler product, under the classical Poisson weights.
ApproxValue cigl_dobinski_numeric(const Rational& q, int n, const Rational& tol, int r_cap);

// Coefficients of exp(e^x - 1) against oracle B_n/n!, exact through order
// max_n. The oracle enumerates set partitions, so max_n is capped at 13.
IdentityVerdict bell_egf_check(int max_n);

// Per-coefficient Dobinski check against exact bell_tilde values:
// VERIFIED iff |dobinski_sum(n) - B~_n| <= tail_bound + tol for all n <= max_n;
// FAILED carries the first offending n; an unbounded tail yields INCONCLUSIVE.
IdentityVerdict psi_egf_coefficient_check(const PsiSequence& seq, int max_n,
                                          DobinskiConvention convention, const Rational& tol,
                                          int r_cap, bool q17_factor = false);

}  // namespace qstirling
