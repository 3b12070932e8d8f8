#include "qstirling/operators.hpp"

#include <stdexcept>

#include "qstirling/detrng.hpp"
#include "qstirling/stirling.hpp"

namespace qstirling {

PolyOperator PolyOperator::identity() {
  return PolyOperator("id", [](const Poly& p) { return p; });
}

PolyOperator PolyOperator::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative operator power");
  PolyOperator acc = identity();
  for (int i = 0; i < n; ++i) acc = compose(*this, acc);
  return acc;
}

PolyOperator compose(PolyOperator outer, PolyOperator inner) {
  std::string d = "(" + outer.descriptor() + "." + inner.descriptor() + ")";
  return PolyOperator(std::move(d), [outer = std::move(outer), inner = std::move(inner)](
                                        const Poly& p) { return outer(inner(p)); });
}

PolyOperator operator+(PolyOperator a, PolyOperator b) {
  std::string d = "(" + a.descriptor() + "+" + b.descriptor() + ")";
  return PolyOperator(std::move(d), [a = std::move(a), b = std::move(b)](const Poly& p) {
    return a(p) + b(p);
  });
}

PolyOperator scale(Rational c, PolyOperator op) {
  std::string d = "(" + c.to_string() + "*" + op.descriptor() + ")";
  return PolyOperator(std::move(d), [c = std::move(c), op = std::move(op)](const Poly& p) {
    return c * op(p);
  });
}

PolyOperator psi_derivative(const PsiSequence& seq) {
  return PolyOperator("d_psi[" + seq.spec_string() + "]", [seq](const Poly& p) {
    if (p.degree() < 1) return Poly();
    std::vector<Rational> out(static_cast<std::size_t>(p.degree()), Rational(0));
    for (int i = 1; i <= p.degree(); ++i)
      out[static_cast<std::size_t>(i - 1)] = seq.value(i) * p.coeff(static_cast<std::size_t>(i));
    return Poly(std::move(out));
  });
}

PolyOperator q_dilation(const Rational& q) {
  return PolyOperator("dilate[" + q.to_string() + "]", [q](const Poly& p) {
    if (p.is_zero()) return Poly();
    std::vector<Rational> out(static_cast<std::size_t>(p.degree()) + 1, Rational(0));
    Rational qi(1);
    for (int i = 0; i <= p.degree(); ++i) {
      out[static_cast<std::size_t>(i)] = qi * p.coeff(static_cast<std::size_t>(i));
      qi *= q;
    }
    return Poly(std::move(out));
  });
}

PolyOperator mult_by_x() {
  return PolyOperator("xhat", [](const Poly& p) { return Poly::x() * p; });
}

IdentityVerdict verify_weyl_expansion(const Rational& q, int n, int m_max) {
  if (n < 0) throw std::invalid_argument("negative operator power");
  const PsiSequence gauss = PsiSequence::q_gauss(q);
  const PolyOperator d_q = psi_derivative(gauss);
  const PolyOperator x_hat = mult_by_x();
  const PolyOperator lhs_op = compose(x_hat, d_q).pow(n);

  const Triangle t = carlitz2(q, n);
  PolyOperator rhs_op = scale(t.cell(n, 0), PolyOperator::identity());
  for (int k = 1; k <= n; ++k)
    rhs_op = rhs_op + scale(t.cell(n, k), compose(x_hat.pow(k), d_q.pow(k)));

  nlohmann::ordered_json params{
      {"q", q.to_string()}, {"n", n}, {"m_max", m_max}, {"expected", "VERIFIED"}};
  for (int m = 0; m <= m_max; ++m) {
    const Poly xm = Poly::monomial(static_cast<std::size_t>(m));
    const Poly lhs = lhs_op(xm);
    const Poly rhs = rhs_op(xm);
    if (lhs != rhs)
      return make_failed("eq23-weyl", params, n,
                         {n, m, lhs.coeff(static_cast<std::size_t>(m)).to_string(),
                          rhs.coeff(static_cast<std::size_t>(m)).to_string()},
                         {q.to_string()});
  }
  return make_verified("eq23-weyl", params, n, {q.to_string()});
}

namespace {

Poly random_poly(DetRng& rng, int deg) {
  std::vector<Rational> c(static_cast<std::size_t>(deg) + 1, Rational(0));
  for (auto& x : c) x = Rational(rng.range(-9, 9), rng.range(1, 4));
  return Poly(std::move(c));
}

}  // namespace

IdentityVerdict q_leibnitz_check(const Rational& q, int deg) {
  if (deg < 0) throw std::invalid_argument("negative degree");
  const PolyOperator d_q = psi_derivative(PsiSequence::q_gauss(q));
  const PolyOperator dil = q_dilation(q);
  nlohmann::ordered_json params{{"q", q.to_string()}, {"deg", deg}, {"expected", "VERIFIED"}};
  DetRng rng{0x51a3u};
  const int trials = 100;
  for (int t = 0; t < trials; ++t) {
    const Poly f = random_poly(rng, static_cast<int>(rng.range(0, deg)));
    const Poly g = random_poly(rng, static_cast<int>(rng.range(0, deg)));
    const Poly lhs = d_q(f * g);
    const Poly rhs = d_q(f) * g + dil(f) * d_q(g);
    if (lhs != rhs) {
      int i = 0;
      while (lhs.coeff(static_cast<std::size_t>(i)) == rhs.coeff(static_cast<std::size_t>(i))) ++i;
      return make_failed("eq23-leibnitz", params, deg,
                         {t, i, lhs.coeff(static_cast<std::size_t>(i)).to_string(),
                          rhs.coeff(static_cast<std::size_t>(i)).to_string()},
                         {q.to_string()});
    }
  }
  return make_verified("eq23-leibnitz", params, deg, {q.to_string()});
}

Rational rota_functional(std::span<const Rational> falling_basis_coords) {
  Rational acc(0);
  for (const auto& c : falling_basis_coords) acc += c;
  return acc;
}

Rational rota_of_poly(const Poly& p) {
  const int deg = p.degree();
  if (deg <= 0) return p.coeff(0);
  std::vector<Rational> nodes;
  for (int i = 0; i < deg; ++i) nodes.push_back(Rational(i));
  const auto coords = newton_coefficients(p, nodes);
  return rota_functional(coords);
}

std::vector<Poly> exponential_polys_by_operator(const PsiSequence& seq, int max_n) {
  if (max_n < 0) throw std::invalid_argument("negative range");
  const PolyOperator d = psi_derivative(seq);
  std::vector<Poly> out;
  out.push_back(Poly::constant(Rational(1)));
  for (int n = 1; n <= max_n; ++n) {
    const Poly& prev = out.back();
    out.push_back(Poly::x() * (prev + d(prev)));
  }
  return out;
}

Rational cigl_dobinski_exact(const Rational& q, int n) {
  if (n < 0) throw std::invalid_argument("negative index");
  std::vector<Rational> roots;
  Rational qj(1);
  for (int j = 0; j < n; ++j) {
    roots.push_back(Rational(1) - qj);
    qj *= q;
  }
  return rota_of_poly(poly_root_product(roots));
}

}  // namespace qstirling
