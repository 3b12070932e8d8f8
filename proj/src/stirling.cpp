#include "qstirling/stirling.hpp"

#include <stdexcept>

namespace qstirling {

namespace {

std::vector<std::vector<Rational>> delta_base(int max_n) {
  if (max_n < 0) throw std::invalid_argument("negative triangle size");
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n)
    rows[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, Rational(0));
  rows[0][0] = Rational(1);
  return rows;
}

}  // namespace

Triangle tilde2_by_recurrence(const PsiSequence& seq, int max_n) {
  auto rows = delta_base(max_n);
  for (int n = 1; n <= max_n; ++n) {
    auto& row = rows[static_cast<std::size_t>(n)];
    const auto& prev = rows[static_cast<std::size_t>(n - 1)];
    for (int k = 1; k <= n; ++k) {
      Rational v = prev[static_cast<std::size_t>(k - 1)];
      if (k < n) v += seq.value(k) * prev[static_cast<std::size_t>(k)];
      row[static_cast<std::size_t>(k)] = std::move(v);
    }
  }
  return Triangle(TriangleFamily::tilde2, seq.spec_string(), std::move(rows));
}

Triangle tilde2_by_basis(const PsiSequence& seq, int max_n) {
  auto rows = delta_base(max_n);
  const std::vector<Rational> nodes = seq.nodes(max_n);
  for (int n = 1; n <= max_n; ++n)
    rows[static_cast<std::size_t>(n)] = newton_coefficients(Poly::monomial(static_cast<std::size_t>(n)), nodes);
  return Triangle(TriangleFamily::tilde2, seq.spec_string(), std::move(rows));
}

Rational tilde2_by_partial_fractions(const PsiSequence& seq, int n, int k) {
  if (k < 1 || n < k) throw std::invalid_argument("partial fractions need n >= k >= 1");
  if (!seq.values_distinct(k)) throw std::domain_error("partial fractions require distinct nodes");
  Rational total(0);
  for (int r = 1; r <= k; ++r) {
    const Rational rv = seq.value(r);
    Rational c(1);
    for (int i = 1; i <= k; ++i) {
      if (i == r) continue;
      c *= rv / (rv - seq.value(i));
    }
    total += c * rv.pow(n - k);
  }
  return total;
}

Rational tilde2_by_compositions(const PsiSequence& seq, int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("negative index");
  if (n > 30) throw std::domain_error("oracle limit");
  if (k > n) return Rational(0);
  if (k == 0) return n == 0 ? Rational(1) : Rational(0);
  const int total_deg = n - k;
  // powers[i][e] = (i+1)_psi ^ e
  std::vector<std::vector<Rational>> powers(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    auto& p = powers[static_cast<std::size_t>(i - 1)];
    p.assign(static_cast<std::size_t>(total_deg) + 1, Rational(1));
    for (int e = 1; e <= total_deg; ++e) p[static_cast<std::size_t>(e)] = p[static_cast<std::size_t>(e - 1)] * seq.value(i);
  }
  Rational total(0);
  // Enumerate weak compositions d_1 + ... + d_k = total_deg.
  std::vector<int> d(static_cast<std::size_t>(k), 0);
  auto rec = [&](auto&& self, int part, int remaining, const Rational& acc) -> void {
    if (part == k - 1) {
      total += acc * powers[static_cast<std::size_t>(part)][static_cast<std::size_t>(remaining)];
      return;
    }
    for (int e = 0; e <= remaining; ++e)
      self(self, part + 1, remaining - e, acc * powers[static_cast<std::size_t>(part)][static_cast<std::size_t>(e)]);
  };
  rec(rec, 0, total_deg, Rational(1));
  return total;
}

Triangle carlitz2(const Rational& q, int max_n) {
  auto rows = delta_base(max_n);
  PsiSequence gauss = PsiSequence::q_gauss(q);
  std::vector<Rational> q_pow{Rational(1)};
  for (int i = 1; i <= max_n; ++i) q_pow.push_back(q_pow.back() * q);
  for (int n = 1; n <= max_n; ++n) {
    auto& row = rows[static_cast<std::size_t>(n)];
    const auto& prev = rows[static_cast<std::size_t>(n - 1)];
    for (int k = 1; k <= n; ++k) {
      Rational v = q_pow[static_cast<std::size_t>(k - 1)] * prev[static_cast<std::size_t>(k - 1)];
      if (k < n) v += gauss.value(k) * prev[static_cast<std::size_t>(k)];
      row[static_cast<std::size_t>(k)] = std::move(v);
    }
  }
  return Triangle(TriangleFamily::carlitz2, "q:" + q.to_string(), std::move(rows));
}

Triangle carlitz2_by_interpolation(const Rational& q, int max_n) {
  auto rows = delta_base(max_n);
  PsiSequence gauss = PsiSequence::q_gauss(q);
  // falling[m][k] = m_q (m-1)_q ... (m-k+1)_q
  std::vector<std::vector<Rational>> falling(static_cast<std::size_t>(max_n) + 1);
  for (int m = 0; m <= max_n; ++m) {
    auto& f = falling[static_cast<std::size_t>(m)];
    f.assign(static_cast<std::size_t>(m) + 1, Rational(1));
    for (int k = 1; k <= m; ++k)
      f[static_cast<std::size_t>(k)] = f[static_cast<std::size_t>(k - 1)] * gauss.value(m - k + 1);
  }
  for (int n = 1; n <= max_n; ++n) {
    auto& row = rows[static_cast<std::size_t>(n)];
    // Solve v_m = sum_{k<=m} c_k * falling[m][k] for m = 0..n (unit... nonzero
    // diagonal falling[m][m] = m_q!), with v_m = (m_q)^n.
    for (int m = 0; m <= n; ++m) {
      Rational v = gauss.value(m).pow(n);
      for (int k = 0; k < m; ++k)
        v -= row[static_cast<std::size_t>(k)] * falling[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
      row[static_cast<std::size_t>(m)] = v / falling[static_cast<std::size_t>(m)][static_cast<std::size_t>(m)];
    }
  }
  return Triangle(TriangleFamily::carlitz2, "q:" + q.to_string(), std::move(rows));
}

Triangle inv2(const Rational& q, int max_n) {
  auto rows = delta_base(max_n);
  PsiSequence gauss = PsiSequence::q_gauss(q);
  for (int n = 1; n <= max_n; ++n) {
    auto& row = rows[static_cast<std::size_t>(n)];
    for (int k = 1; k <= n; ++k) {
      Rational acc(0);
      for (int l = 0; l <= n - 1; ++l) {
        if (k - 1 > n - 1 - l) continue;  // zero cell
        acc += gauss.binomial(n - 1, l) *
               rows[static_cast<std::size_t>(n - 1 - l)][static_cast<std::size_t>(k - 1)];
      }
      row[static_cast<std::size_t>(k)] = std::move(acc);
    }
  }
  return Triangle(TriangleFamily::inv2, "q:" + q.to_string(), std::move(rows));
}

namespace {

// Roots of the Cigler product x(x-1+q)...(x-1+q^{n-1}): 0 and 1-q^j, j=1..n-1.
std::vector<Rational> cigl_roots(const Rational& q, int n) {
  std::vector<Rational> roots;
  Rational qj(1);
  for (int j = 0; j < n; ++j) {
    roots.push_back(Rational(1) - qj);  // j = 0 gives the root 0
    qj *= q;
  }
  return roots;
}

}  // namespace

Triangle cigl2(const Rational& q, int max_n) {
  auto rows = delta_base(max_n);
  std::vector<Rational> classical_nodes;
  for (int i = 0; i < max_n; ++i) classical_nodes.push_back(Rational(i));
  Poly product = Poly::constant(Rational(1));
  Rational qj(1);  // q^{n-1} as the product grows
  for (int n = 1; n <= max_n; ++n) {
    product = product * Poly({qj - Rational(1), Rational(1)});  // x - (1 - q^{n-1})
    qj *= q;
    rows[static_cast<std::size_t>(n)] = newton_coefficients(product, classical_nodes);
  }
  return Triangle(TriangleFamily::cigl2, "q:" + q.to_string(), std::move(rows));
}

Triangle cigl2_by_interpolation(const Rational& q, int max_n) {
  auto rows = delta_base(max_n);
  // falling[m][k] = m^(k) = m(m-1)...(m-k+1)
  std::vector<std::vector<Rational>> falling(static_cast<std::size_t>(max_n) + 1);
  for (int m = 0; m <= max_n; ++m) {
    auto& f = falling[static_cast<std::size_t>(m)];
    f.assign(static_cast<std::size_t>(m) + 1, Rational(1));
    for (int k = 1; k <= m; ++k)
      f[static_cast<std::size_t>(k)] = f[static_cast<std::size_t>(k - 1)] * Rational(m - k + 1);
  }
  for (int n = 1; n <= max_n; ++n) {
    const auto roots = cigl_roots(q, n);
    auto& row = rows[static_cast<std::size_t>(n)];
    for (int m = 0; m <= n; ++m) {
      Rational v(1);  // product evaluated at x = m
      for (const auto& r : roots) v *= Rational(m) - r;
      for (int k = 0; k < m; ++k)
        v -= row[static_cast<std::size_t>(k)] * falling[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
      row[static_cast<std::size_t>(m)] = v / falling[static_cast<std::size_t>(m)][static_cast<std::size_t>(m)];
    }
  }
  return Triangle(TriangleFamily::cigl2, "q:" + q.to_string(), std::move(rows));
}

Triangle tilde1(const PsiSequence& seq, int max_n) {
  auto rows = delta_base(max_n);
  for (int k = 1; k <= max_n; ++k) {
    const Poly p = seq.falling_poly(k);
    auto& row = rows[static_cast<std::size_t>(k)];
    for (int r = 0; r <= k; ++r) row[static_cast<std::size_t>(r)] = p.coeff(static_cast<std::size_t>(r));
  }
  return Triangle(TriangleFamily::tilde1, seq.spec_string(), std::move(rows));
}

Triangle cycle1(const PsiSequence& seq, int max_n) {
  auto rows = delta_base(max_n);
  for (int k = 1; k <= max_n; ++k) {
    const Poly p = seq.rising_poly(k);
    auto& row = rows[static_cast<std::size_t>(k)];
    for (int r = 0; r <= k; ++r) row[static_cast<std::size_t>(r)] = p.coeff(static_cast<std::size_t>(r));
  }
  return Triangle(TriangleFamily::cycle1, seq.spec_string(), std::move(rows));
}

IdentityVerdict orthogonality_check(const PsiSequence& seq, int max_n) {
  const Triangle first = tilde1(seq, max_n);
  const Triangle second = tilde2_by_recurrence(seq, max_n);
  nlohmann::ordered_json params{{"family", seq.spec_string()}, {"expected", "VERIFIED"}};
  for (int k = 0; k <= max_n; ++k) {
    for (int l = 0; l <= max_n; ++l) {
      Rational acc(0);
      for (int r = l; r <= k; ++r) acc += first.cell(k, r) * second.cell(r, l);
      const Rational expect = k == l ? Rational(1) : Rational(0);
      if (acc != expect)
        return make_failed("eq20-orthogonality", params, max_n,
                           {k, l, acc.to_string(), expect.to_string()});
    }
  }
  return make_verified("eq20-orthogonality", params, max_n);
}

}  // namespace qstirling
