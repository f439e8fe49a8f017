#pragma once

#include <string>

#include "sphecke/exactalg/integer.hpp"
#include "sphecke/exactalg/laurent.hpp"

namespace sphecke {

// a + b*v with v = q^{-1/2} for a fixed positive integer q. This is what a
// LaurentScalar becomes once q is specialized to a number.
class SurdNumber {
 public:
  SurdNumber() = default;  // q = 0 marks "any q", only valid for zero
  SurdNumber(int q, Rational rational_part, Rational v_part = 0)
      : q_(q), a_(std::move(rational_part)), b_(std::move(v_part)) {}

  static SurdNumber evaluate(const LaurentScalar& x, int q);

  int q() const { return q_; }
  const Rational& rational_part() const { return a_; }
  const Rational& v_part() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  double to_double() const;

  SurdNumber& operator+=(const SurdNumber& o);
  SurdNumber& operator-=(const SurdNumber& o);
  friend SurdNumber operator+(SurdNumber a, const SurdNumber& b) { return a += b; }
  friend SurdNumber operator-(SurdNumber a, const SurdNumber& b) { return a -= b; }
  friend SurdNumber operator*(const SurdNumber& a, const SurdNumber& b);
  friend SurdNumber operator/(const SurdNumber& a, const SurdNumber& b);
  friend SurdNumber operator-(SurdNumber a) {
    a.a_ = -a.a_;
    a.b_ = -a.b_;
    return a;
  }
  friend bool operator==(const SurdNumber& x, const SurdNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.q_ == y.q_ || x.b_ == 0);
  }

  std::string to_string() const;

 private:
  int merged_q(const SurdNumber& o) const;

  int q_ = 0;
  Rational a_;
  Rational b_;
};

inline bool is_zero(const SurdNumber& x) { return x.is_zero(); }

}  // namespace sphecke
