#include "qstirling/psi.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qstirling {

PsiSequence::PsiSequence(PsiFamily f, Rational q, std::vector<Rational> values, std::string spec)
    : family_(f), q_(std::move(q)), custom_values_(std::move(values)), spec_(std::move(spec)) {
  values_.push_back(Rational(0));      // 0_psi = 0
  factorials_.push_back(Rational(1));  // 0_psi! = 1
}

PsiSequence PsiSequence::classical() {
  return PsiSequence(PsiFamily::classical, Rational(1), {}, "classical");
}

PsiSequence PsiSequence::q_gauss(Rational q) {
  std::string spec = "q:" + q.to_string();
  return PsiSequence(PsiFamily::q_gauss, std::move(q), {}, std::move(spec));
}

PsiSequence PsiSequence::custom(std::vector<Rational> values) {
  std::string spec = "custom:[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) spec += ',';
    spec += values[i].to_string();
  }
  spec += ']';
  return PsiSequence(PsiFamily::custom, Rational(0), std::move(values), std::move(spec));
}

PsiSequence PsiSequence::parse(const std::string& spec) {
  if (spec == "classical") return classical();
  if (spec.rfind("q:", 0) == 0) return q_gauss(Rational::from_string(spec.substr(2)));
  if (spec.rfind("custom:", 0) == 0) {
    const std::string path = spec.substr(7);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open psi file: " + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("bad psi file " + path + ": " + e.what());
    }
    if (!j.is_array()) throw std::invalid_argument("psi file must hold a JSON array of rationals");
    std::vector<Rational> values;
    for (const auto& item : j) {
      if (!item.is_string()) throw std::invalid_argument("psi file entries must be rational strings");
      values.push_back(Rational::from_string(item.get<std::string>()));
    }
    return custom(std::move(values));
  }
  throw std::invalid_argument("bad psi spec '" + spec +
                              "' (expected classical | q:<rational> | custom:<path>)");
}

const Rational& PsiSequence::q() const {
  if (family_ != PsiFamily::q_gauss) throw std::logic_error("psi sequence has no q parameter");
  return q_;
}

void PsiSequence::ensure(int n) const {
  if (n < 0) throw std::invalid_argument("negative psi index");
  while (static_cast<int>(values_.size()) <= n) {
    const int m = static_cast<int>(values_.size());  // next index to fill
    Rational v;
    switch (family_) {
      case PsiFamily::classical:
        v = Rational(m);
        break;
      case PsiFamily::q_gauss:
        // Horner form of 1 + q + ... + q^{m-1}; exact at q = 1 too.
        v = values_[static_cast<std::size_t>(m - 1)] * q_ + Rational(1);
        break;
      case PsiFamily::custom:
        if (m - 1 >= static_cast<int>(custom_values_.size()))
          throw std::out_of_range("psi sequence index out of range");
        v = custom_values_[static_cast<std::size_t>(m - 1)];
        break;
    }
    if (v.is_zero())
      throw std::domain_error("degenerate psi sequence: " + std::to_string(m) + "_psi = 0");
    factorials_.push_back(factorials_.back() * v);
    values_.push_back(std::move(v));
  }
}

Rational PsiSequence::value(int n) const {
  ensure(n);
  return values_[static_cast<std::size_t>(n)];
}

Rational PsiSequence::factorial(int n) const {
  ensure(n);
  return factorials_[static_cast<std::size_t>(n)];
}

Rational PsiSequence::binomial(int n, int k) const {
  if (k < 0 || k > n) return Rational(0);
  ensure(n);
  return factorial(n) / (factorial(k) * factorial(n - k));
}

Poly PsiSequence::falling_poly(int k) const { return poly_root_product(nodes(k)); }

Poly PsiSequence::rising_poly(int k) const {
  std::vector<Rational> roots = nodes(k);
  for (auto& r : roots) r = -r;
  return poly_root_product(roots);
}

std::vector<Rational> PsiSequence::nodes(int k) const {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out.push_back(value(i));
  return out;
}

bool PsiSequence::values_distinct(int upto) const {
  for (int i = 1; i <= upto; ++i)
    for (int j = i + 1; j <= upto; ++j)
      if (value(i) == value(j)) return false;
  return true;
}

}  // namespace qstirling
