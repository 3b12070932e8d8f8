#include "qstirling/bell.hpp"

#include <stdexcept>

#include "qstirling/oracle.hpp"
#include "qstirling/series.hpp"
#include "qstirling/stirling.hpp"

namespace qstirling {

namespace {

std::string bell_family_name(BellFamily f) {
  switch (f) {
    case BellFamily::classical: return "classical";
    case BellFamily::tilde: return "tilde";
    case BellFamily::carlitz_q: return "carlitz";
    case BellFamily::cigl: return "cigl";
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::string BellSequence::to_csv() const {
  std::string out = "n,value\n";
  for (std::size_t n = 0; n < values.size(); ++n)
    out += std::to_string(n) + "," + values[n].to_string() + "\n";
  return out;
}

std::string BellSequence::to_json() const {
  nlohmann::ordered_json j;
  j["family"] = bell_family_name(family);
  j["params"] = params;
  auto vals = nlohmann::ordered_json::array();
  for (const auto& v : values) vals.push_back(v.to_string());
  j["values"] = std::move(vals);
  return j.dump(2) + "\n";
}

nlohmann::ordered_json ApproxValue::to_json(int decimal_digits) const {
  nlohmann::ordered_json j;
  j["partial_sum"] = partial_sum.to_string();
  j["tail_bound"] = tail_bound ? tail_bound->to_string() : "inf";
  j["terms_used"] = terms_used;
  j["decimal"] = partial_sum.to_decimal(decimal_digits);
  return j;
}

BellSequence bell_tilde(const PsiSequence& seq, int max_n) {
  const Triangle t = tilde2_by_recurrence(seq, max_n);
  BellSequence out{BellFamily::tilde, seq.spec_string(), {}};
  for (int n = 0; n <= max_n; ++n) out.values.push_back(t.row_sum(n));
  return out;
}

BellSequence bell_carlitz_by_recurrence(const Rational& q, int max_n) {
  if (max_n < 0) throw std::invalid_argument("negative range");
  const PsiSequence gauss = PsiSequence::q_gauss(q);
  BellSequence out{BellFamily::carlitz_q, "q:" + q.to_string(), {Rational(1)}};
  for (int n = 0; n < max_n; ++n) {
    Rational acc(0);
    Rational ql(1);
    for (int l = 0; l <= n; ++l) {
      acc += gauss.binomial(n, l) * ql * out.values[static_cast<std::size_t>(l)];
      ql *= q;
    }
    out.values.push_back(std::move(acc));
  }
  return out;
}

BellSequence bell_cigl(const Rational& q, int max_n) {
  const Triangle t = cigl2(q, max_n);
  BellSequence out{BellFamily::cigl, "q:" + q.to_string(), {}};
  for (int n = 0; n <= max_n; ++n) out.values.push_back(t.row_sum(n));
  return out;
}

namespace {

struct EpsilonCore {
  Rational sum;
  Rational bound;       // first omitted term's magnitude
  long terms_used = 0;
};

// Alternating sum over j >= 0 of (-1)^j / j_psi!, truncated at the first term
// below tol that does not break the magnitude decrease.
EpsilonCore epsilon_core(const PsiSequence& seq, const Rational& tol, long term_cap) {
  if (!(tol > Rational(0))) throw std::invalid_argument("tolerance must be positive");
  Rational sum(0);
  Rational mag(1);  // |term j| = 1 / j_psi!
  bool negative = false;
  for (long j = 0; j < term_cap; ++j) {
    sum += negative ? -mag : mag;
    negative = !negative;
    const Rational next = mag / seq.value(static_cast<int>(j) + 1).abs();
    if (next < tol && next <= mag) return {std::move(sum), next, j + 1};
    mag = next;
  }
  throw std::runtime_error("epsilon did not converge");
}

// q^{-C(r,2)} for the q17 reweighting flag.
Rational q17_scale(const PsiSequence& seq, int r) {
  Rational q;
  switch (seq.family()) {
    case PsiFamily::classical: q = Rational(1); break;
    case PsiFamily::q_gauss: q = seq.q(); break;
    case PsiFamily::custom:
      throw std::domain_error("q17 factor requires a q-Gauss (or classical) family");
  }
  if (q.is_zero()) throw std::domain_error("q17 factor requires positive q");
  const long e = static_cast<long>(r) * (r - 1) / 2;
  return q.pow(-e);
}

}  // namespace

ApproxValue epsilon_weight(const PsiSequence& seq, int r, const Rational& tol, bool q17_factor,
                           long term_cap) {
  if (r < 0) throw std::invalid_argument("negative r");
  EpsilonCore core = epsilon_core(seq, tol, term_cap);
  if (q17_factor) {
    const Rational f = q17_scale(seq, r);
    core.sum *= f;
    core.bound *= f.abs();
  }
  return {std::move(core.sum), std::move(core.bound), core.terms_used};
}

ApproxValue dobinski_sum(const PsiSequence& seq, int n, DobinskiConvention convention,
                         const Rational& tol, int r_cap, bool q17_factor) {
  if (n < 0) throw std::invalid_argument("negative index");
  if (r_cap < 1) throw std::invalid_argument("r_cap must be >= 1");
  if (!(tol > Rational(0))) throw std::invalid_argument("tolerance must be positive");

  const Rational inner_tol = tol / Rational(4L * r_cap);
  const EpsilonCore base = epsilon_core(seq, inner_tol, 10000);

  Rational sum(0);
  Rational inner_err(0);  // accumulated exactly
  Rational last_mag(0), before_last(0);
  bool have_last = false, have_before = false;
  bool weight_unbounded = false;
  long terms = 0;
  std::optional<Rational> outer_tail;

  for (int r = 0; r <= r_cap; ++r) {
    // Weight for this r, with an exact bound on its truncation error.
    Rational eps = base.sum;
    Rational eps_err = base.bound;
    if (q17_factor) {
      const Rational f = q17_scale(seq, r);
      eps *= f;
      eps_err *= f.abs();
    }
    Rational w, w_err;
    if (convention == DobinskiConvention::weight_times) {
      w = eps;
      w_err = eps_err;
    } else {
      if (eps.is_zero()) throw std::runtime_error("epsilon vanishes; divides convention undefined");
      const Rational lo = eps.abs() - eps_err;
      if (!(lo > Rational(0))) {
        // The truncated epsilon interval straddles zero: 1/eps has no bound.
        weight_unbounded = true;
        w = eps.inverse();
        w_err = Rational(0);
      } else {
        w = eps.inverse();
        w_err = eps_err / (eps.abs() * lo);
      }
    }

    const Rational rv = seq.value(r);
    const Rational factor = (r == 0 && n == 0 ? Rational(1) : rv.pow(n)) / seq.factorial(r);
    const Rational term = w * factor;
    sum += term;
    inner_err += w_err * factor.abs();
    ++terms;

    const Rational mag = term.abs();
    // Strictly positive magnitudes only: a prefix of exact-zero terms (the
    // factor vanishes at small r) must not masquerade as convergence.
    if (have_last && !mag.is_zero() && mag < tol && Rational(2) * mag <= last_mag) {
      // Decreasing with ratio <= 1/2: geometric tail <= last included term.
      outer_tail = mag;
      break;
    }
    before_last = last_mag;
    have_before = have_last;
    last_mag = mag;
    have_last = true;
  }

  if (!outer_tail && have_before && !before_last.is_zero() && !last_mag.is_zero() &&
      last_mag < before_last) {
    // Hit r_cap with terms still shrinking: geometric estimate from the final ratio.
    const Rational ratio = last_mag / before_last;
    outer_tail = last_mag * ratio / (Rational(1) - ratio);
  }

  if (weight_unbounded || !outer_tail) return {std::move(sum), std::nullopt, terms};
  return {std::move(sum), inner_err + *outer_tail, terms};
}

ApproxValue cigl_dobinski_numeric(const Rational& q, int n, const Rational& tol, int r_cap) {
  if (n < 0) throw std::invalid_argument("negative index");
  if (r_cap < 1) throw std::invalid_argument("r_cap must be >= 1");
  if (!(tol > Rational(0))) throw std::invalid_argument("tolerance must be positive");

  const PsiSequence classical = PsiSequence::classical();
  const Rational inner_tol = tol / Rational(4L * r_cap);
  const EpsilonCore eps = epsilon_core(classical, inner_tol, 10000);

  std::vector<Rational> roots;
  Rational qj(1);
  for (int j = 0; j < n; ++j) {
    roots.push_back(Rational(1) - qj);
    qj *= q;
  }
  const Poly product = poly_root_product(roots);

  Rational sum(0);
  Rational inner_err(0);
  Rational fact(1);
  Rational last_mag(0), before_last(0);
  bool have_last = false, have_before = false;
  long terms = 0;
  std::optional<Rational> outer_tail;
  for (int r = 0; r <= r_cap; ++r) {
    if (r > 0) fact *= Rational(r);
    const Rational factor = product.eval(Rational(r)) / fact;
    const Rational term = eps.sum * factor;
    sum += term;
    inner_err += eps.bound * factor.abs();
    ++terms;
    const Rational mag = term.abs();
    if (have_last && !mag.is_zero() && mag < tol && Rational(2) * mag <= last_mag) {
      outer_tail = mag;
      break;
    }
    before_last = last_mag;
    have_before = have_last;
    last_mag = mag;
    have_last = true;
  }
  if (!outer_tail && have_before && !before_last.is_zero() && !last_mag.is_zero() &&
      last_mag < before_last) {
    const Rational ratio = last_mag / before_last;
    outer_tail = last_mag * ratio / (Rational(1) - ratio);
  }
  if (!outer_tail) return {std::move(sum), std::nullopt, terms};
  return {std::move(sum), inner_err + *outer_tail, terms};
}

IdentityVerdict bell_egf_check(int max_n) {
  if (max_n < 0) throw std::invalid_argument("negative order");
  TruncatedSeries em1(max_n);  // e^x - 1
  Rational fact(1);
  for (int j = 1; j <= max_n; ++j) {
    fact *= Rational(j);
    em1.coeff(static_cast<std::size_t>(j)) = fact.inverse();
  }
  const TruncatedSeries egf = series_exp(em1);
  nlohmann::ordered_json params{{"family", "classical"}, {"expected", "VERIFIED"}};
  Rational nfact(1);
  for (int n = 0; n <= max_n; ++n) {
    if (n > 0) nfact *= Rational(n);
    const Rational want = Rational(oracle::bell_number(n)) / nfact;
    const Rational got = egf.coeff(static_cast<std::size_t>(n));
    if (got != want)
      return make_failed("eq1-bell-egf", params, max_n, {n, 0, got.to_string(), want.to_string()});
  }
  return make_verified("eq1-bell-egf", params, max_n);
}

IdentityVerdict psi_egf_coefficient_check(const PsiSequence& seq, int max_n,
                                          DobinskiConvention convention, const Rational& tol,
                                          int r_cap, bool q17_factor) {
  const BellSequence target = bell_tilde(seq, max_n);
  nlohmann::ordered_json params{
      {"family", seq.spec_string()},
      {"convention", convention == DobinskiConvention::weight_times ? "times" : "divides"},
      {"q17_factor", q17_factor},
      {"tol", tol.to_string()},
      {"r_cap", r_cap},
      {"check", "|dobinski_sum(n) - B~_n| <= tail_bound + tol"}};
  for (int n = 0; n <= max_n; ++n) {
    const ApproxValue a = dobinski_sum(seq, n, convention, tol, r_cap, q17_factor);
    if (!a.bounded()) {
      IdentityVerdict v;
      v.identity_id = "eq16-dobinski";
      v.params = params;
      v.params["note"] = "outer terms not eventually decreasing within r_cap at n=" +
                         std::to_string(n) + "; tail unbounded";
      v.range = max_n;
      v.verdict = Verdict::inconclusive;
      return v;
    }
    const Rational err = (a.partial_sum - target.values[static_cast<std::size_t>(n)]).abs();
    if (!(err <= *a.tail_bound + tol))
      return make_failed("eq16-dobinski", params, max_n,
                         {n, 0, a.partial_sum.to_string(),
                          target.values[static_cast<std::size_t>(n)].to_string()});
  }
  return make_verified("eq16-dobinski", params, max_n);
}

}  // namespace qstirling
