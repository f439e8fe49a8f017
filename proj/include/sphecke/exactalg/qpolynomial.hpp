#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "sphecke/exactalg/integer.hpp"

namespace sphecke {

// Dense integer polynomial in one variable. Which variable (u = q^{-1} or q)
// is fixed by the function that produces it. Trailing zeros are never stored.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(std::initializer_list<long long> coeffs);
  explicit QPolynomial(std::vector<Integer> coeffs);

  static QPolynomial monomial(int degree, Integer coeff = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // Index of the lowest nonzero coefficient, -1 for zero.
  int low_degree() const;
  Integer coeff(int k) const;
  const std::vector<Integer>& coeffs() const { return c_; }

  Integer evaluate(const Integer& x) const;
  Rational evaluate(const Rational& x) const;

  // x^d * p(1/x) for d >= degree().
  QPolynomial reversed(int d) const;

  bool all_nonnegative() const;

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(const Integer& k, QPolynomial a);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  // Exact division; throws std::domain_error when the divisor does not divide.
  QPolynomial exact_div(const QPolynomial& divisor) const;

  std::string to_string(const std::string& var) const;

 private:
  void trim();
  std::vector<Integer> c_;
};

}  // namespace sphecke
