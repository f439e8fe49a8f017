#include "sphecke/hecke.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "sphecke/laumon.hpp"

namespace sphecke {

HeckeElement::HeckeElement(const RootSystem& rs, HeckeCoeffs c) : rs_(&rs) {
  for (auto& [mu, x] : c) add(mu, x);
}

HeckeElement HeckeElement::c_basis(const RootSystem& rs, const Weight& mu) {
  if (!rs.is_dominant(mu)) throw std::invalid_argument("c_basis: " + mu.to_string() + " is not dominant");
  return HeckeElement(rs, {{mu, LaurentScalar(1)}});
}

LaurentScalar HeckeElement::coeff(const Weight& mu) const {
  auto it = c_.find(mu);
  return it == c_.end() ? LaurentScalar() : it->second;
}

void HeckeElement::add(const Weight& mu, const LaurentScalar& x) {
  rs_->check(mu);
  if (x.is_zero()) return;
  auto [it, inserted] = c_.try_emplace(mu, x);
  if (!inserted) {
    it->second += x;
    if (it->second.is_zero()) c_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (o.rs_ != rs_) throw std::invalid_argument("HeckeElement: mismatched root systems");
  for (const auto& [mu, x] : o.c_) add(mu, x);
  return *this;
}

HeckeElement HeckeElement::scaled(const LaurentScalar& s) const {
  HeckeElement r(*rs_);
  for (const auto& [mu, x] : c_) r.add(mu, x * s);
  return r;
}

HeckeElement satake_H(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda)) throw std::invalid_argument("satake_H: " + lambda.to_string() + " is not dominant");
  HeckeElement h(rs);
  for (const Weight& mu : rs.dominant_weights_below(lambda))
    h.add(mu, LaurentScalar::from_u_polynomial(lusztig_q_mult(rs, lambda, mu)).shifted(rs.two_rho_pairing(mu)));
  return h;
}

const HeckeCoeffs& c_in_H_basis(const RootSystem& rs, const Weight& mu) {
  static std::shared_mutex mtx;
  static std::map<std::pair<std::string, Weight>, std::unique_ptr<HeckeCoeffs>> memo;
  const auto key = std::make_pair(rs.label(), mu);
  {
    std::shared_lock lock(mtx);
    auto it = memo.find(key);
    if (it != memo.end()) return *it->second;
  }
  // H_mu = v^{2(mu,rho)} c_mu + sum_{nu < mu} a_nu c_nu
  const HeckeElement h = satake_H(rs, mu);
  auto out = std::make_unique<HeckeCoeffs>();
  auto add = [&](const Weight& w, const LaurentScalar& x) {
    auto& slot = (*out)[w];
    slot += x;
    if (slot.is_zero()) out->erase(w);
  };
  const LaurentScalar inv_lead = LaurentScalar::monomial(-rs.two_rho_pairing(mu));
  add(mu, inv_lead);
  for (const auto& [nu, a] : h.coeffs()) {
    if (nu == mu) continue;
    for (const auto& [lambda, b] : c_in_H_basis(rs, nu)) add(lambda, -(inv_lead * a * b));
  }
  std::unique_lock lock(mtx);
  auto [it, inserted] = memo.try_emplace(key, std::move(out));
  return *it->second;
}

HeckeCoeffs to_H_basis(const HeckeElement& h) {
  HeckeCoeffs out;
  for (const auto& [mu, a] : h.coeffs()) {
    for (const auto& [lambda, b] : c_in_H_basis(h.root_system(), mu)) {
      auto& slot = out[lambda];
      slot += a * b;
      if (slot.is_zero()) out.erase(lambda);
    }
  }
  return out;
}

HeckeElement from_H_basis(const RootSystem& rs, const HeckeCoeffs& coeffs) {
  HeckeElement h(rs);
  for (const auto& [lambda, b] : coeffs) h += satake_H(rs, lambda).scaled(b);
  return h;
}

HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b) {
  const RootSystem& rs = a.root_system();
  if (&b.root_system() != &rs) throw std::invalid_argument("hecke_multiply: mismatched root systems");
  const HeckeCoeffs ha = to_H_basis(a), hb = to_H_basis(b);
  HeckeCoeffs prod;
  for (const auto& [l1, x1] : ha) {
    for (const auto& [l2, x2] : hb) {
      const auto tensor = decompose_virtual(rs, weyl_character(rs, l1) * weyl_character(rs, l2));
      for (const auto& [l, m] : tensor) {
        auto& slot = prod[l];
        slot += x1 * x2 * LaurentScalar(m);
        if (slot.is_zero()) prod.erase(l);
      }
    }
  }
  return from_H_basis(rs, prod);
}

LaurentCharacter chi_eval(const HeckeElement& h) {
  LaurentCharacter chi;
  for (const auto& [lambda, b] : to_H_basis(h)) chi += b * weyl_character(h.root_system(), lambda);
  return chi;
}

LaurentCharacter unitary_to_galois(const RootSystem& rs, const LaurentCharacter& chi) {
  if (!rs.is_gl()) throw std::invalid_argument("unitary_to_galois: GL(n) only");
  const int n = static_cast<int>(rs.dim());
  return chi.map_coeffs([n](const Weight& w, const LaurentScalar& c) { return c.shifted((n - 1) * w.sum()); });
}

LaurentCharacter whittaker_value(const RootSystem& rs, const Weight& mu, Normalization norm) {
  if (!rs.is_dominant(mu)) return {};
  const VirtualCharacter s = weyl_character(rs, mu);
  if (norm == Normalization::unitary) return LaurentScalar::monomial(rs.two_rho_pairing(mu)) * s;
  if (!rs.is_gl()) throw std::invalid_argument("whittaker_value: Galois normalization is defined for GL(n) only");
  return LaurentScalar::q_power(n_lambda(mu)) * s;
}

WhittakerElement fourier_symbolic(const HeckeElement& h) { return to_H_basis(h); }

QPolynomial orbit_count_formula(const RootSystem& rs, const Weight& mu) {
  const QPolynomial ratio = rs.poincare().exact_div(rs.stabilizer_poincare(mu));
  const int top = rs.two_rho_pairing(mu);
  if (ratio.degree() > top) throw std::logic_error("orbit_count_formula: degree mismatch");
  return ratio.reversed(top);
}

SphericalValue spherical_value(const RootSystem& rs, const Weight& mu) {
  return {chi_eval(HeckeElement::c_basis(rs, mu)), orbit_count_formula(rs, mu)};
}

QPolynomial macdonald_Q(const RootSystem& rs) {
  QPolynomial d{1};
  for (std::size_t i = 0; i < rs.torus_rank(); ++i) d = d * QPolynomial{1, -1};
  return invariant_factor(rs).exact_div(d);
}

CharSeries root_geometric_series(const RootSystem& rs, int J) {
  CharSeries g(J, VirtualCharacter::single(rs.zero(), 1));
  for (const Weight& a : rs.positive_roots()) {
    for (const Weight& root : {a, -a}) {
      CharSeries f(J);
      for (int k = 0; k <= J; ++k) f[k] = VirtualCharacter::single(k * root, 1);
      g = series_product(g, f);
    }
  }
  return g;
}

CharSeries a_inverse_series(const RootSystem& rs, int J) {
  return series_product(series_from_polynomial(macdonald_Q(rs), J), root_geometric_series(rs, J));
}

namespace {

CharSeries partial_L(const RootSystem& rs, const Weight& mu, const std::vector<Weight>& lambdas, int J,
                     int max_height) {
  CharSeries s(J);
  for (const Weight& lambda : lambdas) {
    if (rs.height(lambda - mu) > max_height) continue;
    const QPolynomial m = lusztig_q_mult(rs, lambda, mu);
    if (m.is_zero() || m.low_degree() > J) continue;
    const VirtualCharacter chi = weyl_character(rs, lambda);
    for (int k = m.low_degree(); k <= std::min(J, m.degree()); ++k)
      if (m.coeff(k) != 0) s[k] += chi.scaled(m.coeff(k));
  }
  return s;
}

}  // namespace

LGammaSeries L_gamma_series(const RootSystem& rs, const Weight& mu, int J, int max_height) {
  if (!rs.is_dominant(mu)) throw std::invalid_argument("L_gamma_series: " + mu.to_string() + " is not dominant");
  const int ht = std::max(1, rs.height(rs.highest_root()));
  // lambda contributes to u^k only if lambda <= mu + k theta
  for (int h = J * ht; h + ht <= max_height; h += ht) {
    const auto lambdas = rs.dominant_weights_above(mu, h + ht);
    const CharSeries inner = partial_L(rs, mu, lambdas, J, h);
    const CharSeries outer = partial_L(rs, mu, lambdas, J, h + ht);
    if (inner == outer) {
      std::size_t used = 0;
      for (const auto& l : lambdas) used += rs.height(l - mu) <= h;
      return {inner, h + 1, used};
    }
  }
  throw std::runtime_error("L_gamma_series: no stabilization below height " + std::to_string(max_height));
}

CharSeries id1_rhs(const RootSystem& rs, const Weight& mu, int J) {
  const SphericalValue s = spherical_value(rs, mu);
  const int shift = rs.two_rho_pairing(mu);
  // v^{2(mu,rho)} chi(c_mu) is a polynomial in u
  CharSeries num(J);
  for (const auto& [w, c] : s.numerator.terms()) {
    const QPolynomial p = c.shifted(shift).u_polynomial(0);
    for (int k = 0; k <= std::min(J, p.degree()); ++k)
      if (p.coeff(k) != 0) num[k].add(w, p.coeff(k));
  }
  // 1/N_mu = u^{2(mu,rho)} W_mu(u) / W(u); one factor v^{2(mu,rho)} goes to
  // the numerator above, the other is the shift shared with the left side
  const auto ratio = series_product(series_from_polynomial(rs.stabilizer_poincare(mu), J),
                                    series_inverse(series_from_polynomial(rs.poincare(), J)));
  return series_product(series_product(ratio, a_inverse_series(rs, J)), num);
}

PlancherelReport plancherel_check(const RootSystem& rs, int J, int max_height) {
  PlancherelReport r;
  const LaurentScalar u = LaurentScalar::u_power(1);
  const LaurentScalar Qv = LaurentScalar::from_u_polynomial(macdonald_Q(rs));
  const LaurentScalar order(static_cast<long long>(rs.weyl_group().size()));
  LaurentCharacter one = LaurentCharacter::single(rs.zero(), 1);
  LaurentCharacter weyl_den = one, u_den = one;
  for (const Weight& a : rs.positive_roots()) {
    for (const Weight& root : {a, -a}) {
      weyl_den = weyl_den * (one - LaurentCharacter::single(root, 1));
      u_den = u_den * (one - LaurentCharacter::single(root, u));
    }
  }
  // a = u_den / Q; dmu = Q weyl_den / (|W| u_den); dmu~ = weyl_den / |W|
  const LaurentCharacter a_num = u_den, dmu_num = weyl_den.scaled(Qv), dmut_num = weyl_den;
  const LaurentScalar a_den = Qv, dmut_den = order;
  const LaurentCharacter dmu_den = u_den.scaled(order);
  r.densities = (a_num * dmu_num).scaled(dmut_den) == dmut_num * dmu_den.scaled(a_den);
  r.shared_factor = dmu_num == weyl_den.scaled(Qv) && dmut_num == weyl_den && !weyl_den.is_zero();

  // integral of s_lambda against dmu equals H_lambda(1) = m^lambda_0(u)
  VirtualCharacter D;
  for (const auto& [w, c] : weyl_den.terms()) D.add(w, c.at_q_one());
  const CharSeries G = root_geometric_series(rs, J);
  const auto Qs = series_from_polynomial(macdonald_Q(rs), J);
  const Integer W(static_cast<long long>(rs.weyl_group().size()));
  auto constant_term = [&](const VirtualCharacter& a, const VirtualCharacter& b) {
    Integer ct = 0;
    for (const auto& [w, c] : a.terms()) ct += c * b.coeff(-w);
    return ct;
  };
  r.macdonald = true;
  r.orthogonality = true;
  const auto lambdas = rs.dominant_weights_above(rs.zero(), max_height);
  for (const Weight& lambda : lambdas) {
    const VirtualCharacter sD = weyl_character(rs, lambda) * D;
    TruncatedSeries<Integer> ct(J);
    for (int k = 0; k <= J; ++k) ct[k] = constant_term(sD, G[k]);
    const auto lhs = series_product(Qs, ct);
    const QPolynomial m = lusztig_q_mult(rs, lambda, rs.zero());
    for (int k = 0; k <= J; ++k) {
      if (lhs[k] % W != 0 || lhs[k] / W != m.coeff(k)) r.macdonald = false;
    }
    for (const Weight& kappa : lambdas) {
      VirtualCharacter dual;
      for (const auto& [w, c] : weyl_character(rs, kappa).terms()) dual.add(-w, c);
      const Integer ct0 = constant_term(sD * dual, VirtualCharacter::single(rs.zero(), 1));
      if (ct0 != (lambda == kappa ? W : Integer(0))) r.orthogonality = false;
    }
    ++r.weights_checked;
  }
  return r;
}

Convergence L_gamma_numeric(const RootSystem& rs, const std::vector<Rational>& gamma, int q, int shells) {
  Convergence c;
  const Rational u(1, q);
  Rational sum = 0;
  const auto lambdas = rs.dominant_weights_above(rs.zero(), shells - 1);
  std::vector<Rational> by_height(static_cast<std::size_t>(shells), Rational(0));
  for (const Weight& lambda : lambdas) {
    const QPolynomial m = lusztig_q_mult(rs, lambda, rs.zero());
    by_height[static_cast<std::size_t>(rs.height(lambda))] +=
        evaluate_character(weyl_character(rs, lambda), gamma) * m.evaluate(u);
  }
  for (const Rational& x : by_height) {
    sum += x;
    c.partial_sums.push_back(sum);
  }
  c.limit = macdonald_Q(rs).evaluate(u);
  for (const Weight& a : rs.positive_roots())
    for (const Weight& root : {a, -a})
      c.limit /= 1 - u * evaluate_character(VirtualCharacter::single(root, 1), gamma);
  const Rational err = sum - c.limit;
  c.relative_error = std::abs(static_cast<double>(err / c.limit));
  return c;
}

LValue local_Lfactor(const RootSystem& rs, const std::vector<Rational>& gamma, const Weight& lambda, const Rational& x) {
  return local_Lfactor(weyl_character(rs, lambda), gamma, x);
}

LValue local_Lfactor(const VirtualCharacter& rep, const std::vector<Rational>& gamma, const Rational& x) {
  Rational det = 1;
  for (const auto& [w, m] : rep.terms()) {
    if (m < 0) throw std::invalid_argument("local_Lfactor: virtual representation");
    const Rational f = 1 - evaluate_character(VirtualCharacter::single(w, 1), gamma) * x;
    if (f == 0) return {true, 0};
    det *= rpow(f, static_cast<int>(m));
  }
  return {false, 1 / det};
}

bool whittaker_model_criterion(const RootSystem& rs, const std::vector<Rational>& gamma, int q) {
  Rational p = 1;
  for (const Weight& a : rs.positive_roots())
    for (const Weight& root : {a, -a})
      p *= 1 - evaluate_character(VirtualCharacter::single(root, 1), gamma) / q;
  return p != 0;
}

}  // namespace sphecke
