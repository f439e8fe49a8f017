#include "sphecke/exactalg/qpolynomial.hpp"

#include <stdexcept>

namespace sphecke {

QPolynomial::QPolynomial(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) c_.emplace_back(c);
  trim();
}

QPolynomial::QPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::monomial(int degree, Integer coeff) {
  if (degree < 0) throw std::invalid_argument("QPolynomial::monomial: negative degree");
  std::vector<Integer> c(static_cast<std::size_t>(degree + 1));
  c.back() = std::move(coeff);
  return QPolynomial(std::move(c));
}

void QPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int QPolynomial::low_degree() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return -1;
}

Integer QPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Integer QPolynomial::evaluate(const Integer& x) const {
  Integer r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Rational QPolynomial::evaluate(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Rational(*it);
  return r;
}

QPolynomial QPolynomial::reversed(int d) const {
  if (d < degree()) throw std::invalid_argument("QPolynomial::reversed: degree too small");
  std::vector<Integer> r(static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= degree(); ++k) r[static_cast<std::size_t>(d - k)] = c_[static_cast<std::size_t>(k)];
  return QPolynomial(std::move(r));
}

bool QPolynomial::all_nonnegative() const {
  for (const auto& c : c_)
    if (c < 0) return false;
  return true;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return QPolynomial(std::move(r));
}

QPolynomial operator*(const Integer& k, QPolynomial a) {
  for (auto& c : a.c_) c *= k;
  a.trim();
  return a;
}

QPolynomial QPolynomial::exact_div(const QPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("QPolynomial::exact_div: division by zero");
  if (is_zero()) return {};
  std::vector<Integer> rem = c_;
  const int dd = divisor.degree();
  const Integer& lead = divisor.c_.back();
  if (degree() < dd) throw std::domain_error("QPolynomial::exact_div: not divisible");
  std::vector<Integer> quo(static_cast<std::size_t>(degree() - dd + 1));
  for (int k = degree() - dd; k >= 0; --k) {
    const Integer& top = rem[static_cast<std::size_t>(k + dd)];
    if (top % lead != 0) throw std::domain_error("QPolynomial::exact_div: not divisible");
    Integer q = top / lead;
    quo[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * divisor.c_[static_cast<std::size_t>(j)];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("QPolynomial::exact_div: not divisible");
  return QPolynomial(std::move(quo));
}

std::string QPolynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!s.empty()) s += " + ";
    if (k == 0) {
      s += c_[k].str();
      continue;
    }
    if (c_[k] != 1) s += c_[k].str() + "*";
    s += var;
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

}  // namespace sphecke
