#pragma once

#include <vector>

#include "sphecke/hecke.hpp"
#include "sphecke/report.hpp"

namespace sphecke {

// Sample of dominant weights: for GL(n) all of P++ with lambda_1 <= size,
// otherwise Dynkin labels summing to at most size.
std::vector<Weight> sample_weights(const RootSystem& rs, int size);

// P_{0 lambda} from the Lusztig-Kato formula against q^{(lambda,rho)} sum_i
// q^{-m_i(lambda)} with m_i read off the harmonic polynomials, for dominant
// lambda >= 0 of height <= max_height.
CheckReport kostant_check(const RootSystem& rs, int max_height, int J);
// P_{0, adjoint} = sum_i q^{m_i - 1}.
CheckReport adjoint_check(const RootSystem& rs);
// sum_m Tr(gamma, V(2m)) (stalk trace of A_{2m} at 1) = (1 + u) / ((1 - u gamma)(1 - u / gamma))
// for SL(2), through u^J.
CheckReport sl2_display_check(int J);
// sum_lambda s_lambda m^lambda_mu(u) = Q(u) prod (1 - u alpha)^{-1} s^mu through u^J.
CheckReport id1_check(const RootSystem& rs, const Weight& mu, int J);
CheckReport plancherel_report(const RootSystem& rs, int J, int max_height);
CheckReport lgamma_numeric_check(const RootSystem& rs, const std::vector<Rational>& gamma, int q, int shells, double tolerance);
// P_{lambda lambda} = 1, P_{mu lambda} has nonnegative integer coefficients
// and degree < ht(lambda - mu) for mu < lambda, H_lambda(lambda(pi)) = q^{-(lambda,rho)}.
CheckReport structural_check(const RootSystem& rs, const std::vector<Weight>& lambdas);

}  // namespace sphecke
