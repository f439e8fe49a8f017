#include "sphecke/laumon.hpp"

#include <stdexcept>

namespace sphecke {

int n_lambda(const Weight& lambda) {
  int s = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) s += static_cast<int>(i) * lambda[i];
  return s;
}

namespace {

void require_pplus(const RootSystem& rs, const Weight& x, const char* what) {
  if (!rs.is_gl()) throw std::invalid_argument(std::string(what) + ": GL(n) only");
  if (!rs.is_pplus(x)) throw std::invalid_argument(std::string(what) + ": " + x.to_string() + " is not in P++");
}

}  // namespace

LaurentCharacter laumon_local_value(const RootSystem& rs, const Weight& mu) {
  require_pplus(rs, mu, "laumon_local_value");
  const int reach = mu.sum() * static_cast<int>(rs.dim());
  LaurentCharacter value;
  for (const Weight& lambda : rs.dominant_weights_above(mu, reach)) {
    if (!rs.is_pplus(lambda)) continue;
    const LaurentScalar h = satake_H(rs, lambda).value_at(mu);
    const LaurentScalar twist = LaurentScalar::monomial(-rs.two_rho_pairing(lambda) - 2 * n_lambda(lambda));
    value += (twist * h) * weyl_character(rs, lambda);
  }
  return value;
}

LaurentCharacter laumon_divisor_value(const RootSystem& rs, const std::vector<Weight>& local_mus) {
  LaurentCharacter value = LaurentCharacter::single(rs.zero(), 1);
  for (const Weight& mu : local_mus) value = value * laumon_local_value(rs, mu);
  return value;
}

StalkTable stalk_table(const RootSystem& rs, const Weight& lambda) {
  require_pplus(rs, lambda, "stalk_table");
  StalkTable t{lambda, {}};
  const int shift = rs.two_rho_pairing(lambda);
  for (const Weight& mu : rs.dominant_weights_below(lambda)) {
    StalkRow row{mu, {}};
    const QPolynomial p = lusztig_kato(rs, lambda, mu);
    for (int k = 0; k <= p.degree(); ++k)
      if (p.coeff(k) != 0) row.entries.push_back({2 * k - shift, p.coeff(k)});
    t.rows.push_back(std::move(row));
  }
  return t;
}

LaurentScalar a_from_stalks(const StalkRow& row) {
  LaurentScalar a;
  for (const auto& [degree, dim] : row.entries) a += LaurentScalar::monomial(-degree, degree % 2 ? Integer(-dim) : dim);
  return a;
}

LaurentScalar b_from_h(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  require_pplus(rs, lambda, "b_from_h");
  if (!rs.is_dominant(mu) || !rs.dominance_leq(mu, lambda))
    throw std::invalid_argument("b_from_h: " + mu.to_string() + " is not below " + lambda.to_string());
  const int two = rs.two_rho_pairing(lambda);
  const int n = static_cast<int>(rs.dim());
  const LaurentScalar a = satake_H(rs, lambda).value_at(mu) * LaurentScalar(two % 2 ? -1 : 1);
  const int sign = (lambda.sum() * (n - 1)) % 2 ? -1 : 1;
  return LaurentScalar::monomial(-two - 2 * n_lambda(lambda), sign) * a;
}

}  // namespace sphecke
