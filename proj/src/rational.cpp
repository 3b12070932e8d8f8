#include "qstirling/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace qstirling {

void Rational::reduce() {
  if (den_ == 0) throw std::domain_error("division by zero");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::from_string(std::string_view s) {
  auto parse_int = [](std::string_view t) -> mpz_class {
    if (t.empty()) throw std::invalid_argument("invalid rational: empty component");
    bool negative = false;
    std::size_t i = 0;
    if (t[0] == '+' || t[0] == '-') {
      negative = t[0] == '-';
      i = 1;
    }
    if (i == t.size()) throw std::invalid_argument("invalid rational: sign only");
    for (std::size_t j = i; j < t.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(t[j])))
        throw std::invalid_argument("invalid rational: '" + std::string(t) + "'");
    mpz_class mag(std::string(t.substr(i)), 10);
    return negative ? mpz_class(-mag) : mag;
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s), mpz_class(1));
  return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

int Rational::cmp_(const Rational& a, const Rational& b) {
  mpz_class lhs = a.num_ * b.den_;
  mpz_class rhs = b.num_ * a.den_;
  return cmp(lhs, rhs);
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

Rational Rational::abs() const { return num_ < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (num_ == 0) throw std::domain_error("division by zero");
  return Rational(den_, num_);
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), num_.get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), den_.get_mpz_t(), static_cast<unsigned long>(e));
  Rational r;
  r.num_ = n;
  r.den_ = d;
  return r;  // already reduced: gcd(n,d)=1 implies gcd(n^e,d^e)=1
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  mpz_class ten_d;
  mpz_ui_pow_ui(ten_d.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled = ::abs(num_) * ten_d;
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), den_.get_mpz_t());
  if (2 * r >= den_) ++q;  // round half away from zero
  mpz_class ip = q / ten_d;
  mpz_class fp = q % ten_d;
  std::string out;
  if (num_ < 0 && q != 0) out += '-';
  out += ip.get_str();
  if (digits > 0) {
    std::string frac = fp.get_str();
    out += '.';
    out += std::string(static_cast<std::size_t>(digits) - frac.size(), '0');
    out += frac;
  }
  return out;
}

Rational operator+(Rational a, const Rational& b) { return a += b; }
Rational operator-(Rational a, const Rational& b) { return a -= b; }
Rational operator*(Rational a, const Rational& b) { return a *= b; }
Rational operator/(Rational a, const Rational& b) { return a /= b; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace qstirling
