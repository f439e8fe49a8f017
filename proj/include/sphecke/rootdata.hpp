#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sphecke/exactalg/integer.hpp"
#include "sphecke/exactalg/qpolynomial.hpp"
#include "sphecke/weight.hpp"

namespace sphecke {

// Element of the Weyl group acting on weight coordinates.
struct WeylElement {
  std::vector<std::vector<int>> matrix;  // dim x dim, acts on column vectors
  int length = 0;
  std::vector<int> word;  // reduced word in simple reflections (leftmost first)

  Weight apply(const Weight& x) const;
  int sign() const { return length % 2 ? -1 : 1; }
};

// Root datum of the dual group. Weights of GL(n) use Z^n; the simple types
// A1, A2, A3, B2, C2, G2 use Dynkin labels, so that <x, alpha_i^vee> = x_i.
class RootSystem {
 public:
  // "GL1".."GL4", "A1", "A2", "A3", "B2", "C2", "G2". Throws
  // std::invalid_argument for anything else.
  static RootSystem build(const std::string& label);

  const std::string& label() const { return label_; }
  bool is_gl() const { return gl_; }
  std::size_t dim() const { return dim_; }           // coordinate count
  std::size_t rank() const { return simple_.size(); }  // semisimple rank
  std::size_t torus_rank() const { return dim_; }

  const std::vector<Weight>& simple_roots() const { return simple_; }
  const std::vector<Weight>& simple_coroots() const { return simple_co_; }
  const std::vector<Weight>& positive_roots() const { return pos_; }
  const std::vector<Weight>& positive_coroots() const { return pos_co_; }
  // (alpha, alpha)/2 for each positive root, short roots normalized to 1.
  const std::vector<int>& root_norms() const { return norms_; }
  const std::vector<int>& simple_norms() const { return simple_norms_; }
  const std::vector<WeylElement>& weyl_group() const { return weyl_; }
  const std::vector<int>& exponents() const { return exponents_; }
  const Weight& two_rho() const { return two_rho_; }
  const Weight& highest_root() const { return theta_; }

  // <x, f> for a coroot functional f.
  static int pair(const Weight& x, const Weight& coroot);
  // 2(x, rho) = sum over positive coroots of <x, alpha^vee>.
  int two_rho_pairing(const Weight& x) const;
  // (x, alpha) in the invariant form with short roots of norm 2, for the
  // positive root with index k.
  int form_with_root(const Weight& x, std::size_t k) const;

  // Coordinates of beta in the basis of simple roots, or nullopt when beta
  // is outside the root lattice.
  std::optional<std::vector<int>> root_coordinates(const Weight& beta) const;
  // Sum of simple-root coordinates; beta must lie in the root lattice.
  int height(const Weight& beta) const;

  bool is_dominant(const Weight& x) const;
  // GL(n) only: dominant with nonnegative last entry.
  bool is_pplus(const Weight& x) const;
  bool dominance_leq(const Weight& mu, const Weight& lambda) const;

  Weight reflect(std::size_t i, const Weight& x) const;
  Weight dominant_conjugate(const Weight& x) const;
  std::vector<Weight> orbit(const Weight& x) const;
  std::size_t stabilizer_size(const Weight& x) const;
  // sum_{w in W_x} u^{l(w)} for the stabilizer of dominant x.
  QPolynomial stabilizer_poincare(const Weight& x) const;
  QPolynomial poincare() const;

  // Dominant mu <= lambda, lambda first, ordered by height of lambda - mu
  // and then lexicographically descending.
  std::vector<Weight> dominant_weights_below(const Weight& lambda) const;
  // Dominant lambda >= mu with height(lambda - mu) <= max_height, same order
  // by increasing height.
  std::vector<Weight> dominant_weights_above(const Weight& mu, int max_height) const;

  Integer weyl_dimension(const Weight& lambda) const;

  Weight zero() const { return Weight(dim_); }
  void check(const Weight& x) const;

 private:
  void finish();

  std::string label_;
  bool gl_ = false;
  std::size_t dim_ = 0;
  std::vector<Weight> simple_, simple_co_;
  std::vector<int> simple_norms_;
  std::vector<Weight> pos_, pos_co_;
  std::vector<int> norms_;
  std::vector<WeylElement> weyl_;
  std::vector<int> exponents_;
  Weight two_rho_;
  Weight theta_;
  std::vector<std::vector<Rational>> to_root_coords_;  // simple types only
};

// Shared immutable instance per label.
const RootSystem& root_system(const std::string& label);

}  // namespace sphecke
