#pragma once

#include <climits>
#include <cstdint>
#include <string>
#include <vector>

#include "sphecke/exactalg/cyclotomic.hpp"
#include "sphecke/weight.hpp"

namespace sphecke {

// Finite Laurent polynomial sum_k c_k pi^k over F_p.
class PiPoly {
 public:
  PiPoly() = default;
  explicit PiPoly(int p) : p_(p) {}
  static PiPoly monomial(int p, int exponent, int coeff = 1);

  int prime() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  // INT_MAX for zero.
  int valuation() const { return c_.empty() ? INT_MAX : lo_; }
  int top_exponent() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  int coeff(int exponent) const;
  int residue() const { return coeff(-1); }

  void set(int exponent, int coeff);
  // Drops every term of exponent >= bound.
  PiPoly truncated(int bound) const;
  PiPoly shifted(int k) const;

  PiPoly& operator+=(const PiPoly& o);
  PiPoly& operator-=(const PiPoly& o);
  friend PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }
  friend PiPoly operator-(PiPoly a, const PiPoly& b) { return a -= b; }
  friend PiPoly operator-(PiPoly a);
  friend PiPoly operator*(const PiPoly& a, const PiPoly& b);
  friend bool operator==(const PiPoly& a, const PiPoly& b) { return a.lo_ == b.lo_ && a.c_ == b.c_; }

  // Inverse of a nonzero element as a Laurent series, exact below
  // valuation(inverse) + precision.
  PiPoly inverse(int precision) const;

  std::string to_string() const;

 private:
  void trim();
  int p_ = 2;
  int lo_ = 0;
  std::vector<int> c_;  // c_[k] is the coefficient of pi^{lo_ + k}, trimmed
};

// n x n matrix over F_p((pi)) with finitely supported entries.
class SeriesMatrix {
 public:
  SeriesMatrix(int n, int p);
  static SeriesMatrix identity(int n, int p);
  // diag(pi^{w_1}, ..., pi^{w_n})
  static SeriesMatrix torus(const Weight& w, int p);

  int size() const { return n_; }
  int prime() const { return p_; }
  const PiPoly& at(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  PiPoly& at(int i, int j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }

  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
  friend bool operator==(const SeriesMatrix& a, const SeriesMatrix& b) { return a.e_ == b.e_; }

  PiPoly determinant() const;
  // Minor on the given rows and columns.
  PiPoly minor(const std::vector<int>& rows, const std::vector<int>& cols) const;
  bool is_upper_triangular() const;
  // Inverse of an upper-triangular matrix whose diagonal entries are monomials.
  SeriesMatrix inverse_upper_triangular() const;

  std::string to_string() const;

 private:
  int n_;
  int p_;
  std::vector<PiPoly> e_;
};

// Elementary divisors of M: lambda with M in K lambda(pi) K, via the minimal
// valuations d_k of k x k minors. Throws std::domain_error for singular M.
Weight cartan_invariant(const SeriesMatrix& m);

// Iwasawa data of g = u mu(pi) k: mu and the exponent e with Psi(u) = zeta^e.
struct IwasawaData {
  Weight mu;
  long long psi_exponent = 0;
};
// Power-series quotients are truncated at the working precision, which is
// raised by the valuation spread of g so that the result is exact.
IwasawaData iwasawa(const SeriesMatrix& g, int precision = 64);

// Psi(u) = zeta_p^{sum_i Res(u_{i,i+1})} for strictly upper unitriangular u.
Cyclotomic psi_value(const SeriesMatrix& u);

}  // namespace sphecke
