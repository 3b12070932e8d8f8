#pragma once

#include "qstirling/psi.hpp"
#include "qstirling/rational.hpp"
#include "qstirling/triangle.hpp"
#include "qstirling/verdict.hpp"

namespace qstirling {

// ---- Second kind, psi-tilde family: four independent routes ----

// {n+1,k}~ = {n,k-1}~ + k_psi {n,k}~, boundary {n,0} = [n==0].
Triangle tilde2_by_recurrence(const PsiSequence& seq, int max_n);

// Row n = Newton coefficients of x^n over nodes 0_psi, 1_psi, ...
Triangle tilde2_by_basis(const PsiSequence& seq, int max_n);

// Partial fractions of x^k / prod_{i=1..k} (1 - i_psi x):
// sum_{r=1..k} r_psi^{n-k} * prod_{i != r} r_psi/(r_psi - i_psi).
// Needs n >= k >= 1 and 1_psi..k_psi pairwise distinct (and nonzero).
Rational tilde2_by_partial_fractions(const PsiSequence& seq, int n, int k);

// Brute-force sum over weak compositions d_1+...+d_k = n-k of
// 1_psi^{d_1} ... k_psi^{d_k}. Guarded: n > 30 throws "oracle limit".
Rational tilde2_by_compositions(const PsiSequence& seq, int n, int k);

// ---- Other second-kind families ----

// Carlitz: {n+1,k}_q = q^{k-1} {n,k-1}_q + k_q {n,k}_q.
Triangle carlitz2(const Rational& q, int max_n);

// Carlitz numbers recovered by triangular interpolation of m_q^n against the
// q-falling products m_q (m-1)_q ... — an independent route for cross-checks.
Triangle carlitz2_by_interpolation(const Rational& q, int max_n);

// Inversion family: {n+1,k}^inv = sum_l (n l)_q {n-l,k-1}^inv.
Triangle inv2(const Rational& q, int max_n);

// Cigler family, defined by the expansion of x(x-1+q)...(x-1+q^{n-1})
// in the classical falling-factorial basis.
Triangle cigl2(const Rational& q, int max_n);

// Same cells recovered by evaluating the product at 0..n and interpolating —
// an independent route for cross-checks.
Triangle cigl2_by_interpolation(const Rational& q, int max_n);

// ---- First kind ----

// Row k = monomial coefficients of psi_k(x) (signed first kind).
Triangle tilde1(const PsiSequence& seq, int max_n);

// Row k = monomial coefficients of the rising product (unsigned, "cycle").
Triangle cycle1(const PsiSequence& seq, int max_n);

// ---- Checks ----

// Inverse-pair orthogonality: sum_r tilde1[k,r] * tilde2[r,l] == delta_{k,l}.
IdentityVerdict orthogonality_check(const PsiSequence& seq, int max_n);

}  // namespace qstirling
