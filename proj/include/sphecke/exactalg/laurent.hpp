#pragma once

#include <map>
#include <string>
#include <vector>

#include "sphecke/exactalg/integer.hpp"
#include "sphecke/exactalg/qpolynomial.hpp"

namespace sphecke {

// Laurent polynomial in a formal variable v with v^2 = q^{-1}. Every q-power
// in the library, including the half-integral ones, is carried this way.
class LaurentScalar {
 public:
  LaurentScalar() = default;
  LaurentScalar(const Integer& c);  // NOLINT: constants convert implicitly
  LaurentScalar(long long c) : LaurentScalar(Integer(c)) {}  // NOLINT
  LaurentScalar(int c) : LaurentScalar(Integer(c)) {}  // NOLINT

  static LaurentScalar monomial(int v_exponent, const Integer& coeff = 1);
  // q^k = v^{-2k}
  static LaurentScalar q_power(int k) { return monomial(-2 * k); }
  // u^k = q^{-k} = v^{2k}
  static LaurentScalar u_power(int k) { return monomial(2 * k); }
  // sum_k p_k u^k
  static LaurentScalar from_u_polynomial(const QPolynomial& p);
  // sum_k p_k q^k
  static LaurentScalar from_q_polynomial(const QPolynomial& p);

  bool is_zero() const { return t_.empty(); }
  const std::map<int, Integer>& terms() const { return t_; }
  Integer coeff(int v_exponent) const;
  int min_exponent() const;  // requires !is_zero()
  int max_exponent() const;  // requires !is_zero()

  // Value at v = 1 (that is, q = 1).
  Integer at_q_one() const;

  // Interprets *this as v^shift * p(u) and returns p. Throws
  // std::domain_error if some exponent is below shift or of wrong parity.
  QPolynomial u_polynomial(int shift) const;

  LaurentScalar shifted(int v_exponent) const;

  LaurentScalar& operator+=(const LaurentScalar& o);
  LaurentScalar& operator-=(const LaurentScalar& o);
  LaurentScalar& operator*=(const LaurentScalar& o);
  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
  friend LaurentScalar operator-(LaurentScalar a);
  friend bool operator==(const LaurentScalar&, const LaurentScalar&) = default;

  // "v^-1 + 2*v^2"
  std::string to_string() const;

 private:
  std::map<int, Integer> t_;
};

inline bool is_zero(const LaurentScalar& x) { return x.is_zero(); }

}  // namespace sphecke
