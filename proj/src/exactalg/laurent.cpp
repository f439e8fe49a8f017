#include "sphecke/exactalg/laurent.hpp"

#include <stdexcept>

namespace sphecke {

LaurentScalar::LaurentScalar(const Integer& c) {
  if (c != 0) t_.emplace(0, c);
}

LaurentScalar LaurentScalar::monomial(int v_exponent, const Integer& coeff) {
  LaurentScalar r;
  if (coeff != 0) r.t_.emplace(v_exponent, coeff);
  return r;
}

LaurentScalar LaurentScalar::from_u_polynomial(const QPolynomial& p) {
  LaurentScalar r;
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeff(k) != 0) r.t_.emplace(2 * k, p.coeff(k));
  return r;
}

LaurentScalar LaurentScalar::from_q_polynomial(const QPolynomial& p) {
  LaurentScalar r;
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeff(k) != 0) r.t_.emplace(-2 * k, p.coeff(k));
  return r;
}

Integer LaurentScalar::coeff(int v_exponent) const {
  auto it = t_.find(v_exponent);
  return it == t_.end() ? Integer(0) : it->second;
}

int LaurentScalar::min_exponent() const {
  if (t_.empty()) throw std::domain_error("LaurentScalar::min_exponent of zero");
  return t_.begin()->first;
}

int LaurentScalar::max_exponent() const {
  if (t_.empty()) throw std::domain_error("LaurentScalar::max_exponent of zero");
  return t_.rbegin()->first;
}

Integer LaurentScalar::at_q_one() const {
  Integer s = 0;
  for (const auto& [e, c] : t_) s += c;
  return s;
}

QPolynomial LaurentScalar::u_polynomial(int shift) const {
  std::vector<Integer> c;
  for (const auto& [e, x] : t_) {
    const int d = e - shift;
    if (d < 0 || d % 2 != 0)
      throw std::domain_error("LaurentScalar::u_polynomial: v^" + std::to_string(e) +
                              " is not v^" + std::to_string(shift) + " times a power of u");
    const auto k = static_cast<std::size_t>(d / 2);
    if (c.size() <= k) c.resize(k + 1);
    c[k] = x;
  }
  return QPolynomial(std::move(c));
}

LaurentScalar LaurentScalar::shifted(int v_exponent) const {
  LaurentScalar r;
  for (const auto& [e, c] : t_) r.t_.emplace(e + v_exponent, c);
  return r;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
  for (const auto& [e, c] : o.t_) {
    auto [it, inserted] = t_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) {
  for (const auto& [e, c] : o.t_) {
    auto [it, inserted] = t_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) t_.erase(it);
    }
  }
  return *this;
}

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
  LaurentScalar r;
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) r += LaurentScalar::monomial(ea + eb, ca * cb);
  return r;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& o) { return *this = *this * o; }

LaurentScalar operator-(LaurentScalar a) {
  for (auto& [e, c] : a.t_) c = -c;
  return a;
}

std::string LaurentScalar::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : t_) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const Integer a = c < 0 ? Integer(-c) : c;
    if (e == 0) {
      s += a.str();
      continue;
    }
    if (a != 1) s += a.str() + "*";
    s += "v";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace sphecke
