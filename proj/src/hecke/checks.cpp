#include "sphecke/checks.hpp"

#include <algorithm>

#include "sphecke/charring.hpp"

namespace sphecke {

std::vector<Weight> sample_weights(const RootSystem& rs, int size) {
  std::vector<Weight> out;
  const std::size_t d = rs.dim();
  Weight w(d);
  auto rec = [&](auto&& self, std::size_t i, int budget) -> void {
    if (i == d) {
      if (rs.is_dominant(w)) out.push_back(w);
      return;
    }
    const int hi = rs.is_gl() ? (i == 0 ? size : w[i - 1]) : budget;
    for (int k = 0; k <= hi; ++k) {
      w[i] = k;
      self(self, i + 1, rs.is_gl() ? budget : budget - k);
    }
  };
  rec(rec, 0, size);
  return out;
}

CheckReport kostant_check(const RootSystem& rs, int max_height, int J) {
  Stopwatch sw;
  CheckReport r;
  r.claim = "kostant";
  for (const Weight& lambda : rs.dominant_weights_above(rs.zero(), max_height)) {
    const QPolynomial lk = lusztig_kato(rs, lambda, rs.zero());
    const std::string tag = rs.label() + " lambda=" + lambda.to_string();
    std::vector<int> ex;
    try {
      ex = generalized_exponents(rs, lambda, J);
    } catch (const std::domain_error&) {
      r.fail(tag + ": generalized exponents exceed degree " + std::to_string(J));
      continue;
    }
    const int half = rs.two_rho_pairing(lambda) / 2;
    QPolynomial kos;
    for (int m : ex) kos += QPolynomial::monomial(half - m);
    if (!(kos == lk)) r.fail(tag + ": Lusztig-Kato " + lk.to_string("q") + " vs exponents " + kos.to_string("q"));
    r.lhs.push_back({{"lambda", to_json(lambda)}, {"P", to_json(lk)}});
    r.rhs.push_back({{"lambda", to_json(lambda)}, {"exponents", ex}});
    ++r.enumerated;
  }
  r.details = {{"rs", rs.label()}, {"max_height", max_height}, {"J", J}};
  r.elapsed = sw.seconds();
  return r;
}

CheckReport adjoint_check(const RootSystem& rs) {
  CheckReport r;
  r.claim = "kostant-adjoint";
  const QPolynomial lk = lusztig_kato(rs, rs.highest_root(), rs.zero());
  QPolynomial expected;
  for (int m : rs.exponents())
    if (m > 0) expected += QPolynomial::monomial(m - 1);
  if (!(lk == expected)) r.fail(rs.label() + ": P_{0,adj} = " + lk.to_string("q") + ", expected " + expected.to_string("q"));
  r.lhs = to_json(lk);
  r.rhs = to_json(expected);
  r.enumerated = 1;
  return r;
}

CheckReport sl2_display_check(int J) {
  Stopwatch sw;
  CheckReport r;
  r.claim = "sl2-display";
  const auto& rs = root_system("A1");
  CharSeries lhs(J);
  // P_{0,2m} has degree < m, so shells up to 2J already cover u^J; the rest
  // is a margin that must contribute nothing
  for (int m = 0; m <= 2 * J + 2; ++m) {
    const QPolynomial p = lusztig_kato(rs, {2 * m}, {0});
    const VirtualCharacter& s = weyl_character(rs, {2 * m});
    // dimension p_k in degree 2k - 2m, trace q^{k-m} = u^{m-k}
    for (int k = 0; k <= p.degree(); ++k) {
      if (m - k > J) continue;
      if (m > 2 * J) r.fail("shell m=" + std::to_string(m) + " reaches u^" + std::to_string(m - k));
      lhs.add_term(m - k, p.coeff(k) * s);
    }
  }
  CharSeries rhs(J);
  for (int a = 0; a <= J; ++a)
    for (int b = 0; a + b <= J; ++b) {
      const VirtualCharacter g = VirtualCharacter::single({2 * (a - b)}, 1);
      rhs.add_term(a + b, g);
      rhs.add_term(a + b + 1, g);
    }
  for (int k = 0; k <= J; ++k) {
    if (!(lhs[k] == rhs[k])) r.fail("u^" + std::to_string(k) + ": " + lhs[k].to_string() + " vs " + rhs[k].to_string());
    r.lhs.push_back(to_json(lhs[k]));
    r.rhs.push_back(to_json(rhs[k]));
  }
  r.details = {{"J", J}};
  r.elapsed = sw.seconds();
  return r;
}

CheckReport id1_check(const RootSystem& rs, const Weight& mu, int J) {
  Stopwatch sw;
  CheckReport r;
  r.claim = "id1";
  const LGammaSeries lhs = L_gamma_series(rs, mu, J);
  const CharSeries rhs = id1_rhs(rs, mu, J);
  for (int k = 0; k <= J; ++k) {
    if (!(lhs.series[k] == rhs[k]))
      r.fail(rs.label() + " mu=" + mu.to_string() + " u^" + std::to_string(k) + ": " + lhs.series[k].to_string() + " vs " +
             rhs[k].to_string());
    r.lhs.push_back(to_json(lhs.series[k]));
    r.rhs.push_back(to_json(rhs[k]));
  }
  r.enumerated = lhs.terms;
  r.details = {{"rs", rs.label()}, {"mu", to_json(mu)}, {"J", J}, {"shells", lhs.shells}};
  r.elapsed = sw.seconds();
  return r;
}

CheckReport plancherel_report(const RootSystem& rs, int J, int max_height) {
  Stopwatch sw;
  CheckReport r;
  r.claim = "plancherel";
  const PlancherelReport p = plancherel_check(rs, J, max_height);
  if (!p.densities) r.fail(rs.label() + ": a(gamma) dmu != dmu~");
  if (!p.shared_factor) r.fail(rs.label() + ": densities lack the common factor prod (1 - alpha)");
  if (!p.macdonald) r.fail(rs.label() + ": integral of s_lambda against dmu != H_lambda(1)");
  if (!p.orthogonality) r.fail(rs.label() + ": Weyl orthogonality against dmu~ fails");
  r.enumerated = p.weights_checked;
  r.details = {{"rs", rs.label()},
               {"J", J},
               {"max_height", max_height},
               {"densities", p.densities},
               {"shared_factor", p.shared_factor},
               {"macdonald", p.macdonald},
               {"orthogonality", p.orthogonality}};
  r.elapsed = sw.seconds();
  return r;
}

CheckReport lgamma_numeric_check(const RootSystem& rs, const std::vector<Rational>& gamma, int q, int shells, double tolerance) {
  Stopwatch sw;
  CheckReport r;
  r.claim = "lgamma-numeric";
  const Convergence c = L_gamma_numeric(rs, gamma, q, shells);
  if (!(c.relative_error < tolerance))
    r.fail("relative error " + std::to_string(c.relative_error) + " after " + std::to_string(shells) + " shells");
  r.lhs = c.partial_sums.empty() ? nlohmann::json(nullptr) : nlohmann::json(c.partial_sums.back().convert_to<double>());
  r.rhs = c.limit.convert_to<double>();
  r.enumerated = c.partial_sums.size();
  r.details = {{"relative_error", c.relative_error}, {"q", q}, {"shells", shells}};
  r.elapsed = sw.seconds();
  return r;
}

CheckReport structural_check(const RootSystem& rs, const std::vector<Weight>& lambdas) {
  Stopwatch sw;
  CheckReport r;
  r.claim = "structure";
  for (const Weight& lambda : lambdas) {
    const std::string tag = rs.label() + " lambda=" + lambda.to_string();
    for (const Weight& mu : rs.dominant_weights_below(lambda)) {
      const QPolynomial p = lusztig_kato(rs, lambda, mu);
      ++r.enumerated;
      if (mu == lambda) {
        if (!(p == QPolynomial{1})) r.fail(tag + ": P_{lambda lambda} = " + p.to_string("q"));
        continue;
      }
      for (const auto& c : p.coeffs())
        if (c < 0) r.fail(tag + " mu=" + mu.to_string() + ": negative coefficient in " + p.to_string("q"));
      if (p.degree() >= rs.height(lambda - mu)) r.fail(tag + " mu=" + mu.to_string() + ": degree too large");
    }
    const HeckeElement h = satake_H(rs, lambda);
    if (!(h.coeff(lambda) == LaurentScalar::monomial(rs.two_rho_pairing(lambda))))
      r.fail(tag + ": H_lambda(lambda(pi)) = " + h.coeff(lambda).to_string());
    for (const auto& [mu, c] : h.coeffs())
      if (!rs.dominance_leq(mu, lambda)) r.fail(tag + ": support outside mu <= lambda");
  }
  r.details = {{"rs", rs.label()}, {"weights", lambdas.size()}};
  r.elapsed = sw.seconds();
  return r;
}

}  // namespace sphecke
