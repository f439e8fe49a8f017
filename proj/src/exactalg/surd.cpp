#include "sphecke/exactalg/surd.hpp"

#include <cmath>
#include <stdexcept>

namespace sphecke {

SurdNumber SurdNumber::evaluate(const LaurentScalar& x, int q) {
  if (q < 2) throw std::invalid_argument("SurdNumber::evaluate: q must be >= 2");
  Rational a = 0;
  Rational b = 0;
  for (const auto& [e, c] : x.terms()) {
    // v^e = q^{-floor(e/2)} * v^{e mod 2}
    const int odd = ((e % 2) + 2) % 2;
    const int k = (e - odd) / 2;
    const Rational scale = rpow(Rational(q), -k);
    (odd ? b : a) += scale * Rational(c);
  }
  return SurdNumber(q, a, b);
}

int SurdNumber::merged_q(const SurdNumber& o) const {
  if (q_ == 0) return o.q_;
  if (o.q_ == 0 || o.q_ == q_) return q_;
  if (b_ == 0 && o.b_ == 0) return q_;
  throw std::invalid_argument("SurdNumber: mismatched q");
}

double SurdNumber::to_double() const {
  double r = static_cast<double>(a_);
  if (b_ != 0) r += static_cast<double>(b_) / std::sqrt(static_cast<double>(q_));
  return r;
}

SurdNumber& SurdNumber::operator+=(const SurdNumber& o) {
  q_ = merged_q(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

SurdNumber& SurdNumber::operator-=(const SurdNumber& o) {
  q_ = merged_q(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

SurdNumber operator*(const SurdNumber& x, const SurdNumber& y) {
  const int q = x.merged_q(y);
  Rational a = x.a_ * y.a_;
  if (x.b_ != 0 && y.b_ != 0) a += x.b_ * y.b_ / Rational(q);
  return SurdNumber(q, a, x.a_ * y.b_ + x.b_ * y.a_);
}

SurdNumber operator/(const SurdNumber& x, const SurdNumber& y) {
  if (y.is_zero()) throw std::domain_error("SurdNumber: division by zero");
  const int q = x.merged_q(y);
  // (a + b v)^{-1} = (a - b v) / (a^2 - b^2/q)
  Rational norm = y.a_ * y.a_;
  if (y.b_ != 0) norm -= y.b_ * y.b_ / Rational(q);
  const SurdNumber conj(q, y.a_ / norm, -y.b_ / norm);
  SurdNumber r = x * conj;
  r.q_ = q;
  return r;
}

std::string SurdNumber::to_string() const {
  std::string s = a_.str();
  if (b_ != 0) s += " + (" + b_.str() + ")*q^(-1/2)";
  return s;
}

}  // namespace sphecke
