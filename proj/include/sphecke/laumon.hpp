#pragma once

#include <utility>
#include <vector>

#include "sphecke/hecke.hpp"

namespace sphecke {

// n(lambda) = sum_i (i - 1) lambda_i.
int n_lambda(const Weight& lambda);

// L_{E,x}(mu(pi)) = sum_{lambda >= mu, |lambda| = |mu|, lambda in P++}
// q^{(lambda,rho) + n(lambda)} Tr(gamma, E(lambda)) H_lambda(mu(pi)), with
// gamma symbolic in the Galois normalization.
LaurentCharacter laumon_local_value(const RootSystem& rs, const Weight& mu);
// Product of local values over a finite divisor, given as (mu, multiplicity
// of the place) pairs; places are independent, so this is a plain product.
LaurentCharacter laumon_divisor_value(const RootSystem& rs, const std::vector<Weight>& local_mus);

struct StalkRow {
  Weight mu;
  std::vector<std::pair<int, Integer>> entries;  // (degree, dimension)
};
struct StalkTable {
  Weight lambda;
  std::vector<StalkRow> rows;
};

// Stalk cohomology of A_lambda along the strata mu <= lambda: P_{mu lambda}(q)
// = sum_k p_k q^k puts dimension p_k in degree 2k - 2(lambda,rho).
StalkTable stalk_table(const RootSystem& rs, const Weight& lambda);
// Trace of Frobenius on the stalk at mu: sum_i (-1)^i dim H^i q^{i/2}.
LaurentScalar a_from_stalks(const StalkRow& row);
// B_lambda(mu) = (-1)^{|lambda|(n-1)} q^{(lambda,rho) + n(lambda)} A_lambda(mu).
LaurentScalar b_from_h(const RootSystem& rs, const Weight& lambda, const Weight& mu);

}  // namespace sphecke
