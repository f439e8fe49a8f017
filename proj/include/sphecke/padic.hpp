#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "sphecke/exactalg.hpp"
#include "sphecke/hecke.hpp"
#include "sphecke/padic/series_matrix.hpp"
#include "sphecke/report.hpp"

namespace sphecke {

// Box N_D / N_m of strictly upper unitriangular u: entry (i,j) runs over
// sum_{k=-D_j}^{m-1} a_k pi^k. For nu in P++ the integrand vanishes unless
// u nu(pi) is integral, i.e. val(u_ij) >= -nu_j, so D_j = nu_j suffices; it
// is N_m-stable once m >= nu_1 - nu_n.
struct EnumerationBounds {
  std::vector<int> pole;  // D_j per column
  int precision = 1;      // m

  static EnumerationBounds defaults(const Weight& nu);
  // D_j + extra_pole, m + extra_precision
  EnumerationBounds widened(int extra_pole, int extra_precision) const;
  int digits() const;
  // exponent of q in vol(N_D) = sum_{i<j} D_j
  int pole_volume() const;
  friend bool operator<(const EnumerationBounds& a, const EnumerationBounds& b) {
    return std::tie(a.pole, a.precision) < std::tie(b.pole, b.precision);
  }
};

// (cartan(u nu(pi)), sum_i Res u_{i,i+1} mod p) -> number of box representatives.
struct OrbitTable {
  Weight nu;
  int p = 2;
  EnumerationBounds bounds;
  std::map<std::pair<Weight, int>, std::uint64_t> counts;
  std::uint64_t enumerated = 0;

  // vol(N_m) = q^{-m n(n-1)/2}
  SurdNumber representative_volume() const;
};

// Enumerates the box, split into `jobs` contiguous ranges of the mixed-radix
// counter (leading coefficients first); partial tables merge in range order.
// Results are cached per (nu, p, bounds).
const OrbitTable& enumerate_orbits(const Weight& nu, int p, const EnumerationBounds& bounds, int jobs = 1);

// Upper-triangular Hermite representatives of gK, g integral with
// val(det) = degree: diag(pi^{a_i}) and entry (i,j) of degree < a_i.
std::vector<SeriesMatrix> hnf_enumerate(int n, int p, int degree);
// Those representatives lying in K mu(pi) K.
std::vector<SeriesMatrix> hnf_enumerate(int p, const Weight& mu);

// (c_mu * c_lambda)(nu(pi)) by counting x in K mu K / K with x^{-1} nu(pi) in K lambda K.
std::uint64_t convolution_oracle(const Weight& mu, const Weight& lambda, const Weight& nu, int p);

// q^{(nu,rho)} vol{u : cartan(u nu(pi)) = mu}.
SurdNumber satake_transform_oracle(const OrbitTable& table, const Weight& mu);

enum class PsiSign { inverse, direct };

// sum_u vol(N_m) Psi^{-1}(u) H_lambda(cartan(u nu(pi))) at q = p.
CyclotomicSum<SurdNumber> fourier_oracle(const OrbitTable& table, const Weight& lambda, PsiSign sign = PsiSign::inverse);

// GL(n) weights in P++ of the given degree, in decreasing lexicographic order.
std::vector<Weight> pplus_weights(int n, int degree);

// Shifts lambda and nu by c (1,...,1) so both lie in P++; returns c.
int central_twist(Weight& lambda, Weight& nu);

struct LocalCheckOptions {
  int extra_pole = 0;
  int precision = -1;  // -1: nu_1 - nu_n + 1
  int max_part = -1;   // bound on lambda_1, -1: none
  int jobs = 1;
};
// fourier_oracle(lambda, nu) = q^{-(lambda,rho)} delta_{lambda nu} for all
// lambda, nu in P++ of GL(n) with |lambda| = |nu| <= deg_max, with the
// enumeration repeated on the widened box.
CheckReport theorem_local_check(int n, int p, int deg_max, const LocalCheckOptions& opt = {});
// Single pair, any dominant GL(n) weights (central twist applied).
CheckReport theorem_local_pair(const Weight& lambda, const Weight& nu, int p, const LocalCheckOptions& opt = {});

// Solves sum_mu a_mu S(c_mu)(nu) = dim V(lambda)_nu top-down in dominance order.
struct OracleH {
  std::map<Weight, SurdNumber> coeffs;
  bool consistent = true;  // no transform mass outside {mu >= nu}
  bool stabilized = true;
  std::uint64_t enumerated = 0;
};
OracleH oracle_H(const Weight& lambda, int p, int jobs = 1);
// oracle_H = satake_H at q = p for lambda in P++ with |lambda| <= deg_max.
CheckReport satake_oracle_check(int n, int p, int deg_max, int jobs = 1);

// sum_u vol L_{E,x}(cartan(u nu(pi))) Psi^{-1}(u) = q^{n(nu)} Tr(gamma, E(nu)).
// The opposite sign is run too and reported under details.
CheckReport fplus_check(const Weight& nu, int p, int jobs = 1);

// W_gamma(g) = Psi^{-1}(u) W_gamma(mu(pi)) with g = u mu(pi) k, unitary
// normalization, at q = p.
CyclotomicSum<SurdCharacter> whittaker_at(const SeriesMatrix& g, PsiSign sign = PsiSign::inverse);
// sum_{x in K mu K / K} W(nu(pi) x) = chi(c_mu) W(nu(pi)).
CheckReport cs_eigen_check(const Weight& mu, const Weight& nu, int p);
// chi(c_{1^i}) = q^{i(n-i)/2} e_i(t) in unitary variables and
// q^{-i(i-1)/2} e_i(t) in galois variables, for i = 1..n.
CheckReport hecke_operator_dictionary(int n);

// vol-weighted count over the box equals vol(N_D) = q^{sum D_j}, and the
// number of representatives is p^{digits}.
CheckReport measure_check(const OrbitTable& table);

}  // namespace sphecke
