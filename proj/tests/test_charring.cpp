#include "doctest.h"

#include <functional>

#include "sphecke/charring.hpp"

using namespace sphecke;

namespace {

// Semistandard tableaux of shape lambda and content mu, counted directly.
long long count_ssyt(const std::vector<int>& shape, const std::vector<int>& content) {
  std::vector<std::vector<int>> t;
  for (int len : shape) t.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c) cells.push_back({static_cast<int>(r), c});
  std::vector<int> left = content;
  const int n = static_cast<int>(content.size());
  std::function<long long(std::size_t)> rec = [&](std::size_t k) -> long long {
    if (k == cells.size()) return 1;
    const auto [r, c] = cells[k];
    long long total = 0;
    for (int v = 1; v <= n; ++v) {
      if (left[static_cast<std::size_t>(v - 1)] == 0) continue;
      if (c > 0 && t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] > v) continue;
      if (r > 0 && t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] >= v) continue;
      t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      --left[static_cast<std::size_t>(v - 1)];
      total += rec(k + 1);
      ++left[static_cast<std::size_t>(v - 1)];
    }
    return total;
  };
  return rec(0);
}

// Multisets of positive roots summing to beta, graded by size.
QPolynomial brute_kostant(const RootSystem& rs, const Weight& beta) {
  const auto& roots = rs.positive_roots();
  std::vector<Integer> c;
  // each multiset is reached once: either skip root i or take one more copy
  std::function<void(std::size_t, Weight, int)> walk = [&](std::size_t i, Weight rest, int used) {
    if (i == roots.size()) {
      if (rest.is_zero()) {
        if (c.size() <= static_cast<std::size_t>(used)) c.resize(static_cast<std::size_t>(used) + 1);
        c[static_cast<std::size_t>(used)] += 1;
      }
      return;
    }
    for (int k = 0;; ++k) {
      auto coords = rs.root_coordinates(rest);
      bool ok = true;
      for (int x : *coords) ok = ok && x >= 0;
      if (!ok) break;
      walk(i + 1, rest, used + k);
      rest -= roots[i];
    }
  };
  walk(0, beta, 0);
  return QPolynomial(c);
}

}  // namespace

TEST_CASE("weyl characters") {
  const auto& gl2 = root_system("GL2");
  auto s10 = weyl_character(gl2, {1, 0});
  CHECK(s10.size() == 2);
  CHECK(s10.coeff({0, 1}) == 1);
  auto s20 = weyl_character(gl2, {2, 0});
  CHECK(s20.size() == 3);
  CHECK(s20.coeff({1, 1}) == 1);
  const auto& gl3 = root_system("GL3");
  auto s210 = weyl_character(gl3, {2, 1, 0});
  Integer dim = 0;
  for (const auto& [w, c] : s210.terms()) dim += c;
  CHECK(dim == 8);
  CHECK(s210.coeff({1, 1, 1}) == 2);
  CHECK_THROWS_AS(weyl_character(gl2, {0, 1}), std::invalid_argument);
}

TEST_CASE("Freudenthal against SSYT counts and the dimension formula") {
  for (const auto& shape : std::vector<std::vector<int>>{{2, 1, 0}, {3, 1, 0}, {4, 2, 1}, {3, 3, 0}}) {
    const auto& rs = root_system("GL3");
    const Weight lambda(shape);
    for (const auto& mu : rs.dominant_weights_below(lambda))
      CHECK(weight_multiplicity(rs, lambda, mu) == count_ssyt(shape, mu.coords()));
  }
  for (const char* l : {"A2", "B2", "C2", "G2", "A3"}) {
    const auto& rs = root_system(l);
    for (const Weight& lambda : rs.dominant_weights_above(rs.zero(), 6)) {
      Integer dim = 0;
      const auto chi = weyl_character(rs, lambda);
      for (const auto& [w, c] : chi.terms()) dim += c;
      CHECK(dim == rs.weyl_dimension(lambda));
    }
  }
}

TEST_CASE("decompose_virtual") {
  const auto& gl2 = root_system("GL2");
  const auto s = weyl_character(gl2, {1, 0});
  const auto d = decompose_virtual(gl2, s * s);
  CHECK(d == std::map<Weight, Integer>{{{2, 0}, 1}, {{1, 1}, 1}});
  CHECK(decompose_virtual(gl2, VirtualCharacter()).empty());
  CHECK_THROWS_AS(decompose_virtual(gl2, VirtualCharacter::single({1, 0}, 1)), std::invalid_argument);
  const auto& a1 = root_system("A1");
  const auto virt = weyl_character(a1, {2}) - weyl_character(a1, {0});
  CHECK(decompose_virtual(a1, virt) == std::map<Weight, Integer>{{{2}, 1}, {{0}, -1}});
  CHECK(multiplicity_of(a1, virt, {0}) == -1);
}

TEST_CASE("q-Kostant partition function") {
  const auto& a1 = root_system("A1");
  CHECK(q_kostant_partition(a1, {2}) == QPolynomial{0, 1});
  CHECK(q_kostant_partition(a1, {6}) == QPolynomial::monomial(3));
  CHECK(q_kostant_partition(a1, {0}) == QPolynomial{1});
  CHECK(q_kostant_partition(a1, {-2}).is_zero());
  const auto& a2 = root_system("A2");
  CHECK(q_kostant_partition(a2, a2.highest_root()) == QPolynomial{0, 1, 1});
  for (const char* l : {"A2", "B2", "G2", "GL3"}) {
    const auto& rs = root_system(l);
    for (const Weight& beta : {rs.two_rho(), rs.highest_root() + rs.highest_root(), rs.two_rho() + rs.highest_root()})
      CHECK(q_kostant_partition(rs, beta) == brute_kostant(rs, beta));
  }
}

TEST_CASE("Lusztig q-analog and Lusztig-Kato polynomials") {
  const auto& a1 = root_system("A1");
  CHECK(lusztig_q_mult(a1, {2}, {2}) == QPolynomial{1});
  CHECK(lusztig_q_mult(a1, {2}, {0}) == QPolynomial{0, 1});
  for (int m = 0; m <= 8; m += 2)
    for (int k = m; k >= 0; k -= 2) CHECK(lusztig_kato(a1, {m}, {k}) == QPolynomial{1});
  const auto& a2 = root_system("A2");
  CHECK(lusztig_q_mult(a2, a2.highest_root(), {0, 0}) == QPolynomial{0, 1, 1});
  CHECK(lusztig_kato(a2, a2.highest_root(), {0, 0}) == QPolynomial{1, 1});
  CHECK(lusztig_kato(root_system("GL3"), {2, 1, 0}, {1, 1, 1}) == QPolynomial{1, 1});
  CHECK_THROWS_AS(lusztig_kato(root_system("GL2"), {1, 1}, {2, 0}), std::invalid_argument);
  for (const char* l : {"GL2", "GL3", "A2", "B2", "G2"}) {
    const auto& rs = root_system(l);
    const Weight top = rs.is_gl() ? Weight(std::vector<int>(rs.dim(), 0)) : rs.zero();
    for (const Weight& lambda : rs.dominant_weights_above(top, 5)) {
      for (const Weight& mu : rs.dominant_weights_below(lambda)) {
        const auto p = lusztig_kato(rs, lambda, mu);
        CHECK(p.all_nonnegative());
        CHECK(p.evaluate(Integer(1)) == weight_multiplicity(rs, lambda, mu));
        if (mu == lambda) CHECK(p == QPolynomial{1});
      }
    }
  }
}

TEST_CASE("symmetric powers and harmonics") {
  const auto& a1 = root_system("A1");
  const auto sym = sym_adjoint_graded(a1, 3);
  CHECK(sym[0] == VirtualCharacter::single({0}, 1));
  CHECK(sym[1] == adjoint_character(a1));
  CHECK(decompose_virtual(a1, sym[2]) == std::map<Weight, Integer>{{{4}, 1}, {{0}, 1}});
  // Sym^2 by brute force over pairs of weights of the adjoint
  VirtualCharacter brute;
  const std::vector<int> w{2, 0, -2};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) brute.add({w[i] + w[j]}, 1);
  CHECK(sym[2] == brute);

  for (const char* l : {"A1", "A2", "B2", "GL2"}) {
    const auto& rs = root_system(l);
    const auto triv = harmonic_multiplicities(rs, rs.zero(), 6);
    CHECK(triv[0] == 1);
    for (int j = 1; j <= 6; ++j) CHECK(triv[static_cast<std::size_t>(j)] == 0);
  }
  const auto& a2 = root_system("A2");
  CHECK(harmonic_multiplicities(a2, a2.highest_root(), 5) == std::vector<Integer>{0, 1, 1, 0, 0, 0});
  for (int m = 0; m <= 4; ++m) CHECK(generalized_exponents(a1, {2 * m}, 8) == std::vector<int>{m});
  CHECK(generalized_exponents(root_system("B2"), root_system("B2").highest_root(), 6) == std::vector<int>{1, 3});
  CHECK(generalized_exponents(a1, {0}, 2) == std::vector<int>{0});
  CHECK_THROWS_AS(generalized_exponents(a1, {8}, 2), std::domain_error);
}

TEST_CASE("harmonic dimensions match the Hilbert series") {
  for (const char* l : {"A2", "B2"}) {
    const auto& rs = root_system(l);
    const int J = 6;
    const auto h = harmonic_characters(rs, J);
    // prod(1 - u^{m+1}) / (1 - u)^{dim g}
    const auto dimg = static_cast<int>(2 * rs.positive_roots().size() + rs.torus_rank());
    auto series = series_from_polynomial(invariant_factor(rs), J);
    auto geo = series_inverse(series_from_polynomial(QPolynomial{1, -1}, J));
    for (int k = 0; k < dimg; ++k) series = series_product(series, geo);
    for (int j = 0; j <= J; ++j) {
      Integer d = 0;
      for (const auto& [w, c] : h[static_cast<std::size_t>(j)].terms()) d += c;
      CHECK(d == series[j]);
    }
  }
}
