#pragma once

#include <map>
#include <vector>

#include "sphecke/exactalg.hpp"
#include "sphecke/rootdata.hpp"

namespace sphecke {

// Multiplicities of the dominant weights of V(lambda) (Freudenthal).
const std::map<Weight, Integer>& dominant_multiplicities(const RootSystem& rs, const Weight& lambda);
Integer weight_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu);
const VirtualCharacter& weyl_character(const RootSystem& rs, const Weight& lambda);

bool is_weyl_invariant(const RootSystem& rs, const VirtualCharacter& chi);
// chi = sum m_lambda * weyl_character(lambda). Throws std::invalid_argument
// when chi is not Weyl invariant.
std::map<Weight, Integer> decompose_virtual(const RootSystem& rs, const VirtualCharacter& chi);
// Multiplicity of V(lambda) in a Weyl-invariant chi, read off chi * (Weyl
// denominator) at lambda + rho.
Integer multiplicity_of(const RootSystem& rs, const VirtualCharacter& chi, const Weight& lambda);

// Coefficient of e^beta in prod_{alpha > 0} (1 - u e^alpha)^{-1}.
QPolynomial q_kostant_partition(const RootSystem& rs, const Weight& beta);
// m^lambda_mu(u) = sum_w (-1)^{l(w)} P_u(w(lambda + rho) - (mu + rho)).
QPolynomial lusztig_q_mult(const RootSystem& rs, const Weight& lambda, const Weight& mu);
// P_{mu lambda}(q) = q^{ht(lambda - mu)} m^lambda_mu(q^{-1}); throws
// std::invalid_argument unless mu <= lambda.
QPolynomial lusztig_kato(const RootSystem& rs, const Weight& lambda, const Weight& mu);

VirtualCharacter adjoint_character(const RootSystem& rs);
// Sym^j of the adjoint representation for j = 0..J.
std::vector<VirtualCharacter> sym_adjoint_graded(const RootSystem& rs, int J);
// prod_i (1 - u^{m_i + 1}).
QPolynomial invariant_factor(const RootSystem& rs);
// Graded character of the harmonic polynomials, degrees 0..J.
std::vector<VirtualCharacter> harmonic_characters(const RootSystem& rs, int J);
std::vector<Integer> harmonic_multiplicities(const RootSystem& rs, const Weight& lambda, int J);
// Throws std::domain_error if J is too small to see all of them.
std::vector<int> generalized_exponents(const RootSystem& rs, const Weight& lambda, int J);

// Value of a character at a numeric torus element. For GL(n) the values are
// the eigenvalues t_i; for the simple types they are x_i = omega_i(gamma).
Rational evaluate_character(const VirtualCharacter& chi, const std::vector<Rational>& point);

}  // namespace sphecke
