#include "doctest.h"

#include "sphecke/hecke.hpp"
#include "sphecke/laumon.hpp"

using namespace sphecke;

namespace {

LaurentScalar v(int e, long long c = 1) { return LaurentScalar::monomial(e, c); }

VirtualCharacter monomials(std::initializer_list<Weight> ws) {
  VirtualCharacter x;
  for (const auto& w : ws) x.add(w, 1);
  return x;
}

}  // namespace

TEST_CASE("satake_H examples") {
  const auto& gl2 = root_system("GL2");
  CHECK(satake_H(gl2, {1, 0}) == HeckeElement(gl2, {{{1, 0}, v(1)}}));
  const auto& a1 = root_system("A1");
  CHECK(satake_H(a1, {2}) == HeckeElement(a1, {{{2}, v(2)}, {{0}, v(2)}}));
  const auto& gl3 = root_system("GL3");
  // q^{-2}(c_{210} + (1 + q) c_{111})
  CHECK(satake_H(gl3, {2, 1, 0}) == HeckeElement(gl3, {{{2, 1, 0}, v(4)}, {{1, 1, 1}, v(4) + v(2)}}));
}

TEST_CASE("unitriangularity and basis inversion") {
  for (const char* l : {"GL2", "GL3", "A2", "B2"}) {
    const auto& rs = root_system(l);
    for (const Weight& lambda : rs.dominant_weights_above(rs.zero(), 4)) {
      const HeckeElement h = satake_H(rs, lambda);
      CHECK(h.coeff(lambda) == v(rs.two_rho_pairing(lambda)));
      for (const auto& [mu, c] : h.coeffs()) CHECK(rs.dominance_leq(mu, lambda));
      // c_in_H_basis o satake_H = identity
      const HeckeElement back = from_H_basis(rs, c_in_H_basis(rs, lambda));
      CHECK(back == HeckeElement::c_basis(rs, lambda));
      CHECK(to_H_basis(h) == HeckeCoeffs{{lambda, LaurentScalar(1)}});
    }
  }
  const auto& a1 = root_system("A1");
  CHECK(c_in_H_basis(a1, {2}) == HeckeCoeffs{{{2}, v(-2)}, {{0}, LaurentScalar(-1)}});
  CHECK(c_in_H_basis(a1, {0}) == HeckeCoeffs{{{0}, LaurentScalar(1)}});
  CHECK(c_in_H_basis(root_system("GL2"), {1, 0}) == HeckeCoeffs{{{1, 0}, v(-1)}});
}

TEST_CASE("multiplication and characters") {
  const auto& gl2 = root_system("GL2");
  const HeckeElement h10 = satake_H(gl2, {1, 0});
  CHECK(hecke_multiply(h10, h10) == satake_H(gl2, {2, 0}) + satake_H(gl2, {1, 1}));
  const HeckeElement unit = satake_H(gl2, {0, 0});
  CHECK(hecke_multiply(unit, h10) == h10);
  // (c_10 * c_10)(diag(pi, pi)) = q + 1
  const auto c10 = HeckeElement::c_basis(gl2, {1, 0});
  const auto sq = hecke_multiply(c10, c10);
  CHECK(SurdNumber::evaluate(sq.coeff({1, 1}), 2) == SurdNumber(2, 3));
  CHECK(sq.coeff({2, 0}) == LaurentScalar(1));

  CHECK(chi_eval(h10) == LaurentCharacter(LaurentScalar(1) * monomials({{1, 0}, {0, 1}})));
  CHECK(chi_eval(unit) == LaurentCharacter::single({0, 0}, 1));
  CHECK(chi_eval(HeckeElement::c_basis(gl2, {1, 1})) == LaurentCharacter::single({1, 1}, 1));
  // homomorphism on pairs
  for (const char* l : {"GL2", "A2", "B2"}) {
    const auto& rs = root_system(l);
    const auto ws = rs.dominant_weights_above(rs.zero(), 2);
    for (const auto& a : ws)
      for (const auto& b : ws) {
        const auto x = HeckeElement::c_basis(rs, a) + satake_H(rs, b);
        const auto y = HeckeElement::c_basis(rs, b);
        CHECK(chi_eval(hecke_multiply(x, y)) == chi_eval(x) * chi_eval(y));
      }
  }
}

TEST_CASE("spherical values and orbit counts") {
  const auto& gl2 = root_system("GL2");
  CHECK(orbit_count_formula(gl2, {1, 0}) == QPolynomial{1, 1});
  CHECK(orbit_count_formula(gl2, {2, 0}) == QPolynomial{0, 1, 1});
  CHECK(orbit_count_formula(gl2, {1, 1}) == QPolynomial{1});
  const auto s0 = spherical_value(gl2, {0, 0});
  CHECK(s0.numerator == LaurentCharacter::single({0, 0}, 1));
  CHECK(s0.denominator == QPolynomial{1});
  const auto s10 = spherical_value(gl2, {1, 0});
  CHECK(s10.numerator == v(-1) * monomials({{1, 0}, {0, 1}}));
  CHECK(s10.denominator == QPolynomial{1, 1});
}

TEST_CASE("whittaker values and fourier transform") {
  const auto& gl2 = root_system("GL2");
  CHECK(whittaker_value(gl2, {0, 0}, Normalization::unitary) == LaurentCharacter::single({0, 0}, 1));
  CHECK(whittaker_value(gl2, {0, 1}, Normalization::unitary).is_zero());
  CHECK(whittaker_value(gl2, {1, 0}, Normalization::unitary) == v(1) * monomials({{1, 0}, {0, 1}}));
  for (const char* l : {"GL2", "GL3", "GL4"}) {
    const auto& rs = root_system(l);
    const int n = static_cast<int>(rs.dim());
    for (const Weight& mu : rs.dominant_weights_above(rs.zero(), 3)) {
      for (const Weight& nu : {mu, mu + Weight(std::vector<int>(rs.dim(), 1))}) {
        CHECK(2 * (n_lambda(nu)) + rs.two_rho_pairing(nu) == nu.sum() * (n - 1));
        const auto gal = whittaker_value(rs, nu, Normalization::galois);
        const auto uni = whittaker_value(rs, nu, Normalization::unitary);
        CHECK(gal == uni.scaled(LaurentScalar::monomial(-nu.sum() * (n - 1))));
      }
    }
  }
  const auto c10 = HeckeElement::c_basis(gl2, {1, 0});
  CHECK(fourier_symbolic(c10) == WhittakerElement{{{1, 0}, v(-1)}});
  CHECK(fourier_symbolic(satake_H(gl2, {2, 0})) == WhittakerElement{{{2, 0}, LaurentScalar(1)}});
  CHECK(fourier_symbolic(HeckeElement(gl2)).empty());
}

TEST_CASE("a(gamma)^{-1} is the graded character of harmonics") {
  const auto& a1 = root_system("A1");
  const auto s = a_inverse_series(a1, 4);
  CHECK(s[0] == VirtualCharacter::single({0}, 1));
  CHECK(s[1] == adjoint_character(a1));
  for (const char* l : {"A1", "A2", "B2", "GL2", "GL3"}) {
    const auto& rs = root_system(l);
    const int J = 5;
    const auto h = harmonic_characters(rs, J);
    const auto a = a_inverse_series(rs, J);
    for (int j = 0; j <= J; ++j) CHECK(a[j] == h[static_cast<std::size_t>(j)]);
  }
}

TEST_CASE("id1 series identity") {
  for (const char* l : {"GL2", "A1", "GL3"}) {
    const auto& rs = root_system(l);
    const int J = rs.dim() > 2 ? 3 : 6;
    for (const Weight& mu : rs.dominant_weights_above(rs.zero(), 2)) {
      const auto lhs = L_gamma_series(rs, mu, J);
      CHECK(lhs.series == id1_rhs(rs, mu, J));
    }
  }
  const auto& gl2 = root_system("GL2");
  const auto l0 = L_gamma_series(gl2, {0, 0}, 4);
  CHECK(l0.series[0] == VirtualCharacter::single({0, 0}, 1));
}

TEST_CASE("plancherel layer") {
  for (const char* l : {"GL2", "GL3", "A2", "B2"}) {
    const auto r = plancherel_check(root_system(l), 6, 3);
    CHECK(r.densities);
    CHECK(r.shared_factor);
    CHECK(r.macdonald);
    CHECK(r.orthogonality);
  }
}

TEST_CASE("numeric convergence and L-factors") {
  const auto& gl2 = root_system("GL2");
  const auto c = L_gamma_numeric(gl2, {Rational(3, 2), Rational(2, 3)}, 4, 50);
  CHECK(c.relative_error < 1e-9);
  CHECK(c.partial_sums.size() == 50);
  CHECK(local_Lfactor(VirtualCharacter(), {1, 1}, Rational(1, 2)).value == 1);
  CHECK(local_Lfactor(gl2, {1, 1}, {0, 0}, Rational(1, 2)).value == 2);
  const auto l = local_Lfactor(gl2, {1, 1}, {1, 0}, Rational(1, 2));
  CHECK(!l.pole);
  CHECK(l.value == 4);
  CHECK(local_Lfactor(gl2, {2, 1}, {1, 0}, Rational(1, 2)).pole);
  // alpha(gamma) = x^2 = q for A1 with x = omega(gamma) = 2, q = 4
  CHECK(!whittaker_model_criterion(root_system("A1"), {2}, 4));
  CHECK(whittaker_model_criterion(root_system("A1"), {3}, 4));
}
