#include <doctest.h>

#include "qstirling/detrng.hpp"
#include "qstirling/psi.hpp"

using namespace qstirling;

TEST_CASE("psi values for the q-Gauss family") {
  const PsiSequence q2 = PsiSequence::q_gauss(Rational(2));
  CHECK(q2.value(0) == Rational(0));
  CHECK(q2.value(3) == Rational(7));  // 1 + 2 + 4
  const PsiSequence qh = PsiSequence::q_gauss(Rational(1, 2));
  CHECK(qh.value(2) == Rational(3, 2));
  const PsiSequence classical = PsiSequence::classical();
  CHECK(classical.value(5) == Rational(5));
}

TEST_CASE("q-Gauss values agree with the direct power sum") {
  DetRng rng{11};
  for (int trial = 0; trial < 20; ++trial) {
    const Rational q(rng.range(0, 9), rng.range(1, 5));
    const PsiSequence seq = PsiSequence::q_gauss(q);
    Rational direct(0), qpow(1);
    for (int n = 1; n <= 12; ++n) {
      direct += qpow;  // 1 + q + ... + q^{n-1}
      qpow *= q;
      CHECK(seq.value(n) == direct);
      // geometric-sum recurrence
      CHECK(seq.value(n) - seq.value(n - 1) * q == Rational(1));
    }
  }
}

TEST_CASE("psi factorials") {
  const PsiSequence q2 = PsiSequence::q_gauss(Rational(2));
  CHECK(q2.factorial(3) == Rational(21));  // 1 * 3 * 7
  CHECK(q2.factorial(0) == Rational(1));
  const PsiSequence qh = PsiSequence::q_gauss(Rational(1, 2));
  CHECK(qh.factorial(3) == Rational(21, 8));  // 1 * 3/2 * 7/4
}

TEST_CASE("psi binomials") {
  const PsiSequence q2 = PsiSequence::q_gauss(Rational(2));
  CHECK(q2.binomial(4, 2) == Rational(35));
  // cross-check: Gaussian binomial polynomial 1 + q + 2q^2 + q^3 + q^4 at q=2
  CHECK(Rational(1 + 2 + 2 * 4 + 8 + 16) == Rational(35));
  CHECK(q2.binomial(7, 0) == Rational(1));
  CHECK(q2.binomial(7, 7) == Rational(1));
  CHECK(q2.binomial(3, 5) == Rational(0));  // k > n convention
  const PsiSequence classical = PsiSequence::classical();
  CHECK(classical.binomial(5, 2) == Rational(10));
}

TEST_CASE("psi-Pascal factorization holds exactly") {
  const PsiSequence seq = PsiSequence::q_gauss(Rational(3, 5));
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(seq.binomial(n, k) * seq.factorial(k) * seq.factorial(n - k) == seq.factorial(n));
}

TEST_CASE("classical specialization up to 50") {
  const PsiSequence classical = PsiSequence::classical();
  const PsiSequence q1 = PsiSequence::q_gauss(Rational(1));
  Rational fact(1);
  for (int n = 1; n <= 50; ++n) {
    fact *= Rational(n);
    CHECK(classical.value(n) == Rational(n));
    CHECK(classical.factorial(n) == fact);
    CHECK(q1.value(n) == classical.value(n));
    CHECK(q1.factorial(n) == classical.factorial(n));
  }
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) CHECK(q1.binomial(n, k) == classical.binomial(n, k));
}

TEST_CASE("falling and rising polynomials") {
  const PsiSequence classical = PsiSequence::classical();
  CHECK(classical.falling_poly(0) == Poly::constant(Rational(1)));
  CHECK(classical.falling_poly(3) ==
        Poly({Rational(0), Rational(2), Rational(-3), Rational(1)}));
  CHECK(classical.rising_poly(3) ==
        Poly({Rational(0), Rational(2), Rational(3), Rational(1)}));
  const PsiSequence q2 = PsiSequence::q_gauss(Rational(2));
  CHECK(q2.falling_poly(3) == Poly({Rational(0), Rational(3), Rational(-4), Rational(1)}));
  CHECK(q2.rising_poly(2) == Poly({Rational(0), Rational(1), Rational(1)}));
}

TEST_CASE("custom sequences and degenerate errors") {
  const PsiSequence custom =
      PsiSequence::custom({Rational(2), Rational(7, 2), Rational(5)});
  CHECK(custom.value(0) == Rational(0));
  CHECK(custom.value(2) == Rational(7, 2));
  CHECK(custom.factorial(3) == Rational(35));
  CHECK_THROWS_AS(custom.value(4), std::out_of_range);

  const PsiSequence zero_holder = PsiSequence::custom({Rational(1), Rational(0)});
  CHECK(zero_holder.value(1) == Rational(1));  // fine until the zero is touched
  CHECK_THROWS_AS(zero_holder.value(2), std::domain_error);

  // q = -1 makes 2_q = 0; rejected lazily at first use
  const PsiSequence qm1 = PsiSequence::q_gauss(Rational(-1));
  CHECK(qm1.value(1) == Rational(1));
  CHECK_THROWS_AS(qm1.value(2), std::domain_error);
}

TEST_CASE("distinctness flag") {
  const PsiSequence q2 = PsiSequence::q_gauss(Rational(2));
  CHECK(q2.values_distinct(10));
  const PsiSequence q0 = PsiSequence::q_gauss(Rational(0));
  CHECK_FALSE(q0.values_distinct(3));  // all values are 1
  const PsiSequence rep = PsiSequence::custom({Rational(3), Rational(3)});
  CHECK_FALSE(rep.values_distinct(2));
}

TEST_CASE("psi spec parsing") {
  CHECK(PsiSequence::parse("classical").spec_string() == "classical");
  const PsiSequence q = PsiSequence::parse("q:3/5");
  CHECK(q.family() == PsiFamily::q_gauss);
  CHECK(q.q() == Rational(3, 5));
  CHECK(q.spec_string() == "q:3/5");
  CHECK_THROWS_AS(PsiSequence::parse("garbage"), std::invalid_argument);
  CHECK_THROWS_AS(PsiSequence::parse("custom:/no/such/file.json"), std::invalid_argument);
}
