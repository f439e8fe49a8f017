#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sphecke/charring.hpp"
#include "sphecke/exactalg.hpp"
#include "sphecke/rootdata.hpp"

namespace sphecke {

using HeckeCoeffs = std::map<Weight, LaurentScalar>;

// K-bi-invariant function, stored in the basis c_mu of characteristic
// functions of double cosets K mu(pi) K.
class HeckeElement {
 public:
  explicit HeckeElement(const RootSystem& rs) : rs_(&rs) {}
  HeckeElement(const RootSystem& rs, HeckeCoeffs c);

  static HeckeElement c_basis(const RootSystem& rs, const Weight& mu);

  const RootSystem& root_system() const { return *rs_; }
  const HeckeCoeffs& coeffs() const { return c_; }
  LaurentScalar coeff(const Weight& mu) const;
  // Value at mu(pi) for dominant mu.
  LaurentScalar value_at(const Weight& mu) const { return coeff(mu); }
  bool is_zero() const { return c_.empty(); }

  void add(const Weight& mu, const LaurentScalar& x);
  HeckeElement& operator+=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  HeckeElement scaled(const LaurentScalar& s) const;
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.rs_ == b.rs_ && a.c_ == b.c_; }

 private:
  const RootSystem* rs_;
  HeckeCoeffs c_;
};

// H_lambda = sum_{mu <= lambda} v^{2(mu,rho)} m^lambda_mu(u) c_mu.
HeckeElement satake_H(const RootSystem& rs, const Weight& lambda);
// c_mu = sum_lambda b_{mu lambda} H_lambda.
const HeckeCoeffs& c_in_H_basis(const RootSystem& rs, const Weight& mu);
HeckeCoeffs to_H_basis(const HeckeElement& h);
HeckeElement from_H_basis(const RootSystem& rs, const HeckeCoeffs& coeffs);
// Convolution, transported through the Satake isomorphism.
HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b);
// chi_gamma(h) for symbolic unitary gamma: a character with coefficients in v.
LaurentCharacter chi_eval(const HeckeElement& h);

enum class Normalization { unitary, galois };

// Converts a character in unitary torus variables to the Galois variables,
// t_unit = q^{-(n-1)/2} t_gal (GL(n) only).
LaurentCharacter unitary_to_galois(const RootSystem& rs, const LaurentCharacter& chi);

// W_gamma(mu(pi)) for symbolic gamma. Unitary: q^{-(mu,rho)} Tr(gamma, V(mu));
// galois (GL(n)): q^{n(mu)} Tr(gamma, V(mu)); zero off the dominant cone.
LaurentCharacter whittaker_value(const RootSystem& rs, const Weight& mu, Normalization norm);

// Element of the space of (N, Psi)-equivariant functions, in the basis phi_lambda.
using WhittakerElement = std::map<Weight, LaurentScalar>;
WhittakerElement fourier_symbolic(const HeckeElement& h);

// Number of cosets gK in K mu(pi) K: q^{2(mu,rho)} W(u) / W_mu(u), as a
// polynomial in q.
QPolynomial orbit_count_formula(const RootSystem& rs, const Weight& mu);

// s^mu_gamma = chi_gamma(c_mu) / N_mu(q).
struct SphericalValue {
  LaurentCharacter numerator;
  QPolynomial denominator;  // in q
};
SphericalValue spherical_value(const RootSystem& rs, const Weight& mu);

using CharSeries = TruncatedSeries<VirtualCharacter>;

// Q(u) = prod (1 - u^{m_i + 1}) / (1 - u)^l.
QPolynomial macdonald_Q(const RootSystem& rs);
// prod_{alpha in Delta} (1 - u e^alpha)^{-1} through degree J.
CharSeries root_geometric_series(const RootSystem& rs, int J);
// a(gamma)^{-1} = Q(u) prod (1 - u alpha)^{-1}.
CharSeries a_inverse_series(const RootSystem& rs, int J);

// L_gamma at mu(pi) divided by v^{2(mu,rho)}: sum_{lambda >= mu} s_lambda
// m^lambda_mu(u). Shells of lambda are added until one full extra shell
// changes nothing through degree J; throws std::runtime_error past max_height.
struct LGammaSeries {
  CharSeries series;
  int shells = 0;
  std::size_t terms = 0;
};
LGammaSeries L_gamma_series(const RootSystem& rs, const Weight& mu, int J, int max_height = 400);
// Q(u) prod (1 - u alpha)^{-1} s^mu, with the same v-shift removed.
CharSeries id1_rhs(const RootSystem& rs, const Weight& mu, int J);

struct PlancherelReport {
  bool densities = false;      // a * dmu = dmu~ after cross-multiplication
  bool shared_factor = false;  // both densities carry prod (1 - alpha)
  bool macdonald = false;      // integral of s_lambda against dmu = H_lambda(1)
  bool orthogonality = false;  // Weyl orthogonality against dmu~
  std::size_t weights_checked = 0;
  bool ok() const { return densities && shared_factor && macdonald && orthogonality; }
};
PlancherelReport plancherel_check(const RootSystem& rs, int J, int max_height);

// Partial sums of L_gamma(1) = sum_lambda Tr(gamma, V(lambda)) H_lambda(1) at
// numeric q and gamma, one entry per height shell, with the closed-form limit
// Q(1/q) prod (1 - alpha(gamma)/q)^{-1}.
struct Convergence {
  std::vector<Rational> partial_sums;
  Rational limit;
  double relative_error = 0;
};
Convergence L_gamma_numeric(const RootSystem& rs, const std::vector<Rational>& gamma, int q, int shells);

struct LValue {
  bool pole = false;
  Rational value;  // meaningful when !pole
};
// det(1 - r_lambda(gamma) x)^{-1} with x = q^{-s}.
LValue local_Lfactor(const RootSystem& rs, const std::vector<Rational>& gamma, const Weight& lambda, const Rational& x);
// Same for an arbitrary (actual) representation given by its character.
LValue local_Lfactor(const VirtualCharacter& rep, const std::vector<Rational>& gamma, const Rational& x);
// prod_{alpha in Delta} (1 - alpha(gamma)/q) != 0.
bool whittaker_model_criterion(const RootSystem& rs, const std::vector<Rational>& gamma, int q);

}  // namespace sphecke
