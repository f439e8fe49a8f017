#include "doctest.h"

#include <random>

#include "sphecke/exactalg.hpp"

using namespace sphecke;

TEST_CASE("laurent arithmetic") {
  const LaurentScalar v2 = LaurentScalar::monomial(2);
  CHECK((LaurentScalar(1) + v2) * (LaurentScalar(1) - v2) == LaurentScalar(1) - LaurentScalar::monomial(4));
  CHECK(LaurentScalar::q_power(1) * LaurentScalar::u_power(1) == LaurentScalar(1));
  CHECK((v2 - v2).is_zero());
  CHECK(LaurentScalar::from_u_polynomial(QPolynomial{1, 1}).u_polynomial(0) == QPolynomial{1, 1});
  CHECK_THROWS_AS(LaurentScalar::monomial(1).u_polynomial(0), std::domain_error);
  CHECK(LaurentScalar::monomial(-1, 3).to_string() == "3*v^-1");
}

TEST_CASE("qpolynomial") {
  const QPolynomial a{1, 1};
  const QPolynomial b{1, -1};
  CHECK(a * b == QPolynomial{1, 0, -1});
  CHECK((a * b).exact_div(a) == b);
  CHECK_THROWS_AS(QPolynomial({1, 0, 1}).exact_div(a), std::domain_error);
  CHECK(a.evaluate(Integer(3)) == 4);
  CHECK(QPolynomial({1, 2}).reversed(2) == QPolynomial({0, 2, 1}));
}

TEST_CASE("cyclotomic") {
  const auto z2 = Cyclotomic::zeta_power(2, 1);
  CHECK(z2 + z2 == Cyclotomic(2, -2));
  const auto one = Cyclotomic(3, 1);
  CHECK((one + Cyclotomic::zeta_power(3, 1) + Cyclotomic::zeta_power(3, 2)).is_zero());
  CHECK(Cyclotomic::zeta_power(5, 2) * Cyclotomic::zeta_power(5, 4) == Cyclotomic::zeta_power(5, 1));
  CHECK(Cyclotomic::zeta_power(5, -1) == Cyclotomic::zeta_power(5, 4));
  CHECK_THROWS_AS(Cyclotomic(2, 1) + Cyclotomic(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(Cyclotomic(4), std::invalid_argument);

  CyclotomicSum<LaurentScalar> s(3, LaurentScalar());
  for (int k = 0; k < 3; ++k) s.add(k, LaurentScalar::monomial(1));
  CHECK(s.in_base_ring());
  CHECK(s.base_value().is_zero());
  s.add(1, LaurentScalar(1));
  CHECK(!s.in_base_ring());
}

TEST_CASE("cyclotomic ring axioms on random triples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int p : {2, 3, 5}) {
    auto rnd = [&] {
      Cyclotomic x(p);
      for (int k = 0; k < p; ++k) x += Cyclotomic(p, d(rng)) * Cyclotomic::zeta_power(p, k);
      return x;
    };
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = rnd(), b = rnd(), c = rnd();
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("laurent ring axioms on random triples") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  auto rnd = [&] {
    LaurentScalar x;
    for (int k = 0; k < 4; ++k) x += LaurentScalar::monomial(d(rng), d(rng));
    return x;
  };
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = rnd(), b = rnd(), c = rnd();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("surd evaluation") {
  const auto x = SurdNumber::evaluate(LaurentScalar::monomial(1) + LaurentScalar::monomial(-2), 4);
  CHECK(x.rational_part() == 4);
  CHECK(x.v_part() == 1);
  CHECK(x.to_double() == doctest::Approx(4.5));
  const auto v = SurdNumber(2, 0, 1);
  CHECK(v * v == SurdNumber(2, Rational(1, 2)));
  CHECK((x / x) == SurdNumber(4, 1));
}

TEST_CASE("characters") {
  VirtualCharacter std2;
  std2.add({1, 0}, 1);
  std2.add({0, 1}, 1);
  const auto sq = std2 * std2;
  CHECK(sq.coeff({2, 0}) == 1);
  CHECK(sq.coeff({1, 1}) == 2);
  CHECK(sq.coeff({0, 2}) == 1);
  CHECK((std2 * VirtualCharacter()).is_zero());
  const auto a2 = std2.adams(2);
  CHECK(a2.size() == 2);
  CHECK(a2.coeff({2, 0}) == 1);
  CHECK(a2.coeff({1, 1}) == 0);
}

TEST_CASE("truncated series") {
  auto a = series_from_polynomial(QPolynomial{1, -1}, 5);
  auto inv = series_inverse(a);
  for (int k = 0; k <= 5; ++k) CHECK(inv[k] == 1);
  auto b = series_from_polynomial(QPolynomial{1, 2, 3}, 3);
  auto prod = series_product(a, b);
  CHECK(prod.order() == 3);
  CHECK(prod == series_from_polynomial(QPolynomial{1, -1} * QPolynomial{1, 2, 3}, 3));
  CHECK((a + b).order() == 3);
}

TEST_CASE("weights") {
  CHECK(parse_weight("2, 1,0") == Weight{2, 1, 0});
  CHECK_THROWS_AS(parse_weight("2,x"), std::invalid_argument);
  CHECK((Weight{1, 2} + Weight{3, -1}).to_string() == "4,1");
}
