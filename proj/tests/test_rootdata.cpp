#include "doctest.h"

#include <algorithm>
#include <set>

#include "sphecke/rootdata.hpp"

using namespace sphecke;

TEST_CASE("GL2 basics") {
  const auto& rs = root_system("GL2");
  CHECK(rs.two_rho() == Weight{1, -1});
  CHECK(rs.positive_roots() == std::vector<Weight>{{1, -1}});
  CHECK(rs.weyl_group().size() == 2);
  CHECK(rs.exponents() == std::vector<int>{0, 1});
  CHECK(rs.two_rho_pairing({2, 0}) == 2);
}

TEST_CASE("pairings") {
  CHECK(root_system("GL3").two_rho_pairing({2, 1, 0}) == 4);
  for (int n = 1; n <= 4; ++n) {
    Weight e(static_cast<std::size_t>(n));
    e[0] = 1;
    CHECK(root_system("GL" + std::to_string(n)).two_rho_pairing(e) == n - 1);
  }
}

TEST_CASE("exponents and group orders") {
  CHECK(root_system("A1").exponents() == std::vector<int>{1});
  CHECK(root_system("A2").exponents() == std::vector<int>{1, 2});
  CHECK(root_system("A3").exponents() == std::vector<int>{1, 2, 3});
  CHECK(root_system("B2").exponents() == std::vector<int>{1, 3});
  CHECK(root_system("C2").exponents() == std::vector<int>{1, 3});
  CHECK(root_system("G2").exponents() == std::vector<int>{1, 5});
  CHECK(root_system("GL4").exponents() == std::vector<int>{0, 1, 2, 3});
  for (const char* l : {"A1", "A2", "A3", "B2", "C2", "G2", "GL1", "GL2", "GL3", "GL4"}) {
    const auto& rs = root_system(l);
    int sum = 0;
    std::size_t prod = 1;
    for (int m : rs.exponents()) {
      sum += m;
      prod *= static_cast<std::size_t>(m + 1);
    }
    CHECK(static_cast<std::size_t>(sum) == rs.positive_roots().size());
    CHECK(prod == rs.weyl_group().size());
    for (const auto& co : rs.simple_coroots()) CHECK(RootSystem::pair(rs.two_rho(), co) == 2);
  }
  CHECK_THROWS_AS(RootSystem::build("E8"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build("GL5"), std::invalid_argument);
}

TEST_CASE("B2 Weyl group against signed permutations") {
  // B2 acts on the orthonormal plane by signed permutations; in Dynkin labels
  // x = (a, b) corresponds to e-coordinates (a + b/2, b/2).
  const auto& rs = root_system("B2");
  REQUIRE(rs.weyl_group().size() == 8);
  const Weight x{3, 1};  // regular
  std::set<std::pair<int, int>> got;
  for (const auto& w : rs.weyl_group()) {
    const Weight y = w.apply(x);
    got.insert({2 * y[0] + y[1], y[1]});  // doubled e-coordinates
  }
  std::set<std::pair<int, int>> expected;
  const int e1 = 2 * 3 + 1, e2 = 1;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      expected.insert({s1 * e1, s2 * e2});
      expected.insert({s1 * e2, s2 * e1});
    }
  CHECK(got == expected);
  // lengths = number of positive roots sent negative
  for (const auto& w : rs.weyl_group()) {
    int neg = 0;
    for (const auto& a : rs.positive_roots()) {
      auto c = rs.root_coordinates(w.apply(a));
      if ((*c)[0] < 0 || (*c)[1] < 0) ++neg;
    }
    CHECK(neg == w.length);
  }
}

TEST_CASE("dominance order") {
  const auto& gl2 = root_system("GL2");
  CHECK(gl2.dominance_leq({1, 1}, {2, 0}));
  CHECK(!gl2.dominance_leq({2, 0}, {1, 1}));
  CHECK(!gl2.dominance_leq({1, 0}, {1, 1}));
  CHECK(!gl2.dominance_leq({1, 1}, {1, 0}));
  CHECK(root_system("GL3").dominance_leq({1, 1, 1}, {2, 1, 0}));
}

TEST_CASE("dominant weights below") {
  CHECK(root_system("GL2").dominant_weights_below({2, 0}) == std::vector<Weight>{{2, 0}, {1, 1}});
  CHECK(root_system("GL2").dominant_weights_below({3, 0}) == std::vector<Weight>{{3, 0}, {2, 1}});
  CHECK(root_system("GL3").dominant_weights_below({2, 1, 0}) == std::vector<Weight>{{2, 1, 0}, {1, 1, 1}});
  // partitions of 4 with at most 3 parts
  CHECK(root_system("GL3").dominant_weights_below({4, 0, 0}).size() == 4);
  const auto& a2 = root_system("A2");
  CHECK(a2.dominant_weights_below(a2.highest_root()) == std::vector<Weight>{{1, 1}, {0, 0}});
  const auto above = root_system("A1").dominant_weights_above({0}, 4);
  CHECK(above == std::vector<Weight>{{0}, {2}, {4}, {6}, {8}});
}

TEST_CASE("orbits and dimensions") {
  for (const char* l : {"A2", "B2", "G2", "GL3"}) {
    const auto& rs = root_system(l);
    for (const auto& w : rs.weyl_group()) {
      const Weight x = w.apply(rs.two_rho() + rs.simple_roots()[0]);
      CHECK(rs.is_dominant(rs.dominant_conjugate(x)));
    }
  }
  const auto& b2 = root_system("B2");
  CHECK(b2.orbit({1, 0}).size() == 4);
  CHECK(b2.stabilizer_size({1, 0}) == 2);
  CHECK(b2.weyl_dimension({0, 1}) == 4);  // spin representation of so(5)
  CHECK(b2.weyl_dimension(b2.highest_root()) == 10);
  CHECK(root_system("G2").weyl_dimension(root_system("G2").highest_root()) == 14);
  CHECK(root_system("GL3").weyl_dimension({2, 1, 0}) == 8);
  CHECK(b2.height(b2.highest_root()) == 3);
}
