#include <doctest.h>

#include "qstirling/detrng.hpp"
#include "qstirling/oracle.hpp"
#include "qstirling/poly.hpp"
#include "qstirling/rational.hpp"
#include "qstirling/series.hpp"

using namespace qstirling;

namespace {

Rational rnd_rational(DetRng& rng) {
  // numerators up to 64-bit scale, denominators modest
  const long n = rng.range(-1000000000L, 1000000000L) * rng.range(1, 1000000L);
  return Rational(n, rng.range(1, 997));
}

}  // namespace

TEST_CASE("rational basics and serialization") {
  CHECK(Rational(6, 4).to_string() == "3/2");
  CHECK(Rational(-6, 4).to_string() == "-3/2");
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(0, 7).to_string() == "0");
  CHECK(Rational(5).to_string() == "5");
  CHECK(Rational::from_string("21/14") == Rational(3, 2));
  CHECK(Rational::from_string("-3") == Rational(-3));
  CHECK(Rational::from_string("+9/12") == Rational(3, 4));
  CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational ordering and decimal rendering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 2).to_decimal(3) == "3.500");
  CHECK(Rational(-1, 8).to_decimal(2) == "-0.13");  // half away from zero
  CHECK(Rational(1, 3).to_decimal(0) == "0");
  CHECK(Rational(2, 3).to_decimal(0) == "1");
  CHECK(Rational(52).to_decimal(10) == "52.0000000000");
  CHECK(Rational(1).pow(-3) == Rational(1));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("rational exactness properties on random values") {
  DetRng rng{42};
  for (int i = 0; i < 200; ++i) {
    const Rational a = rnd_rational(rng), b = rnd_rational(rng), c = rnd_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
  }
}

TEST_CASE("poly_mul examples") {
  const Poly x = Poly::x();
  const Poly xm1({Rational(-1), Rational(1)});
  CHECK(x * xm1 == Poly({Rational(0), Rational(-1), Rational(1)}));  // x^2 - x
  const Poly p({Rational(3), Rational(0), Rational(7)});
  CHECK(p * Poly::constant(Rational(1)) == p);
  const Poly xp1({Rational(1), Rational(1)});
  CHECK(xp1 * xm1 == Poly({Rational(-1), Rational(0), Rational(1)}));  // x^2 - 1
}

TEST_CASE("poly degree additivity and zero handling") {
  DetRng rng{7};
  for (int i = 0; i < 50; ++i) {
    std::vector<Rational> ac(static_cast<std::size_t>(rng.range(1, 6)), Rational(0));
    std::vector<Rational> bc(static_cast<std::size_t>(rng.range(1, 6)), Rational(0));
    for (auto& v : ac) v = Rational(rng.range(-5, 5));
    for (auto& v : bc) v = Rational(rng.range(-5, 5));
    ac.back() = Rational(rng.range(1, 5));  // force nonzero leading coefficient
    bc.back() = Rational(rng.range(1, 5));
    const Poly a(ac), b(bc);
    CHECK((a * b).degree() == a.degree() + b.degree());
  }
  CHECK((Poly() * Poly::x()).is_zero());
  CHECK(Poly().degree() == -1);
  CHECK(Poly().to_strings() == std::vector<std::string>{"0"});
}

TEST_CASE("poly_root_product examples") {
  CHECK(poly_root_product({}) == Poly::constant(Rational(1)));
  const std::vector<Rational> r01{Rational(0), Rational(1)};
  CHECK(poly_root_product(r01) == Poly({Rational(0), Rational(-1), Rational(1)}));
  // x(x-1)(x-3) = x^3 - 4x^2 + 3x  (psi_3 for q-Gauss at q=2)
  const std::vector<Rational> r013{Rational(0), Rational(1), Rational(3)};
  CHECK(poly_root_product(r013) ==
        Poly({Rational(0), Rational(3), Rational(-4), Rational(1)}));
}

TEST_CASE("newton_coefficients examples") {
  const Poly x2 = Poly::monomial(2);
  const std::vector<Rational> nodes01{Rational(0), Rational(1)};
  CHECK(newton_coefficients(x2, nodes01) ==
        std::vector<Rational>{Rational(0), Rational(1), Rational(1)});
  const std::vector<Rational> nodes0r{Rational(0), Rational(5, 3)};
  CHECK(newton_coefficients(x2, nodes0r) ==
        std::vector<Rational>{Rational(0), Rational(5, 3), Rational(1)});
  // x^3 over nodes [0, 1, 1+q] at q=2: tilde-Stirling row [0, 1, 4, 1]
  const std::vector<Rational> nodes_q2{Rational(0), Rational(1), Rational(3)};
  CHECK(newton_coefficients(Poly::monomial(3), nodes_q2) ==
        std::vector<Rational>{Rational(0), Rational(1), Rational(4), Rational(1)});
  CHECK_THROWS_WITH_AS(newton_coefficients(Poly::monomial(3), nodes01),
                       "basis too small", std::invalid_argument);
}

TEST_CASE("newton_coefficients round-trips against reconstruction") {
  DetRng rng{99};
  for (int trial = 0; trial < 60; ++trial) {
    const int deg = static_cast<int>(rng.range(0, 12));
    std::vector<Rational> coeffs(static_cast<std::size_t>(deg) + 1, Rational(0));
    for (auto& c : coeffs) c = Rational(rng.range(-20, 20), rng.range(1, 7));
    coeffs.back() = Rational(rng.range(1, 20));
    const Poly p(coeffs);
    // distinct random nodes
    std::vector<Rational> nodes;
    while (static_cast<int>(nodes.size()) < deg) {
      Rational nd(rng.range(-15, 15), rng.range(1, 4));
      bool dup = false;
      for (const auto& u : nodes) dup = dup || u == nd;
      if (!dup) nodes.push_back(nd);
    }
    const auto newton = newton_coefficients(p, nodes);
    CHECK(poly_from_newton(newton, nodes) == p);
  }
  // repeated nodes are handled too
  const std::vector<Rational> rep{Rational(2), Rational(2), Rational(2)};
  const Poly p({Rational(1), Rational(4), Rational(-2), Rational(5)});
  CHECK(poly_from_newton(newton_coefficients(p, rep), rep) == p);
}

TEST_CASE("series_exp examples") {
  TruncatedSeries x(3);
  x.coeff(1) = Rational(1);
  const TruncatedSeries ex = series_exp(x);
  CHECK(ex.coeff(0) == Rational(1));
  CHECK(ex.coeff(1) == Rational(1));
  CHECK(ex.coeff(2) == Rational(1, 2));
  CHECK(ex.coeff(3) == Rational(1, 6));

  CHECK(series_exp(TruncatedSeries(4)) ==
        TruncatedSeries({Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)}));

  // exp(e^x - 1): coefficient of x^4 is B_4/4! = 5/8
  TruncatedSeries em1(4);
  Rational fact(1);
  for (int j = 1; j <= 4; ++j) {
    fact *= Rational(j);
    em1.coeff(static_cast<std::size_t>(j)) = fact.inverse();
  }
  const TruncatedSeries bell_egf = series_exp(em1);
  CHECK(oracle::bell_number(4) == 15);
  CHECK(bell_egf.coeff(4) == Rational(5, 8));

  TruncatedSeries bad(2);
  bad.coeff(0) = Rational(1);
  CHECK_THROWS_AS(series_exp(bad), std::invalid_argument);
}

TEST_CASE("series_compose examples") {
  TruncatedSeries outer({Rational(1), Rational(1), Rational(0)});  // 1 + x
  TruncatedSeries inner(2);
  inner.coeff(2) = Rational(1);  // x^2
  CHECK(series_compose(outer, inner) ==
        TruncatedSeries({Rational(1), Rational(0), Rational(1)}));

  TruncatedSeries ident(5);
  ident.coeff(1) = Rational(1);
  TruncatedSeries arbitrary({Rational(2), Rational(-3), Rational(1, 2), Rational(7),
                             Rational(0), Rational(4)});
  CHECK(series_compose(arbitrary, ident) == arbitrary);

  // e^{x + x^2/2} to order 2 = 1 + x + x^2
  TruncatedSeries expser({Rational(1), Rational(1), Rational(1, 2)});
  TruncatedSeries in2({Rational(0), Rational(1), Rational(1, 2)});
  CHECK(series_compose(expser, in2) ==
        TruncatedSeries({Rational(1), Rational(1), Rational(1)}));

  TruncatedSeries bad({Rational(1), Rational(1)});
  CHECK_THROWS_AS(series_compose(expser, bad), std::invalid_argument);
}

TEST_CASE("series exp(s) * exp(-s) == 1 for random s") {
  DetRng rng{123};
  for (int trial = 0; trial < 20; ++trial) {
    const int order = static_cast<int>(rng.range(1, 16));
    TruncatedSeries s(order);
    for (int i = 1; i <= order; ++i)
      s.coeff(static_cast<std::size_t>(i)) = Rational(rng.range(-9, 9), rng.range(1, 5));
    TruncatedSeries minus_s(order);
    for (int i = 0; i <= order; ++i)
      minus_s.coeff(static_cast<std::size_t>(i)) = -s.coeff(static_cast<std::size_t>(i));
    const TruncatedSeries prod = series_exp(s) * series_exp(minus_s);
    TruncatedSeries one(order);
    one.coeff(0) = Rational(1);
    CHECK(prod == one);
  }
}

TEST_CASE("series_inverse is a true inverse") {
  DetRng rng{321};
  for (int trial = 0; trial < 20; ++trial) {
    const int order = static_cast<int>(rng.range(0, 12));
    TruncatedSeries s(order);
    s.coeff(0) = Rational(rng.range(1, 9), rng.range(1, 4));
    for (int i = 1; i <= order; ++i)
      s.coeff(static_cast<std::size_t>(i)) = Rational(rng.range(-9, 9), rng.range(1, 5));
    TruncatedSeries one(order);
    one.coeff(0) = Rational(1);
    CHECK(s * series_inverse(s) == one);
  }
  CHECK_THROWS_AS(series_inverse(TruncatedSeries(3)), std::invalid_argument);
}
