#include "sphecke/charring.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace sphecke {

namespace {

// Read-mostly memo table: lookups share the lock, inserts take it exclusively.
template <class K, class V>
class Memo {
 public:
  template <class F>
  const V& get(const K& key, F&& compute) {
    {
      std::shared_lock lock(mu_);
      auto it = table_.find(key);
      if (it != table_.end()) return *it->second;
    }
    auto value = std::make_unique<V>(compute());
    std::unique_lock lock(mu_);
    auto [it, inserted] = table_.try_emplace(key, std::move(value));
    return *it->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<K, std::unique_ptr<V>> table_;
};

using Key1 = std::pair<std::string, Weight>;
using Key2 = std::tuple<std::string, Weight, Weight>;

void require_dominant(const RootSystem& rs, const Weight& x, const char* what) {
  if (!rs.is_dominant(x)) throw std::invalid_argument(std::string(what) + ": " + x.to_string() + " is not dominant");
}

}  // namespace

const std::map<Weight, Integer>& dominant_multiplicities(const RootSystem& rs, const Weight& lambda) {
  static Memo<Key1, std::map<Weight, Integer>> memo;
  require_dominant(rs, lambda, "weyl_character");
  return memo.get({rs.label(), lambda}, [&] {
    std::map<Weight, Integer> m;
    for (const Weight& mu : rs.dominant_weights_below(lambda)) {
      if (mu == lambda) {
        m[mu] = 1;
        continue;
      }
      // (lambda - mu, lambda + mu + 2 rho), expanded along simple roots
      const auto c = *rs.root_coordinates(lambda - mu);
      const Weight s = lambda + mu + rs.two_rho();
      Integer denom = 0;
      for (std::size_t j = 0; j < c.size(); ++j)
        denom += Integer(c[j]) * rs.simple_norms()[j] * RootSystem::pair(s, rs.simple_coroots()[j]);
      Integer num = 0;
      for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
        const Weight& a = rs.positive_roots()[k];
        for (Weight x = mu + a;; x += a) {
          auto it = m.find(rs.dominant_conjugate(x));
          if (it == m.end()) break;
          num += it->second * rs.form_with_root(x, k);
        }
      }
      num *= 2;
      if (denom <= 0 || num % denom != 0) throw std::logic_error("Freudenthal recursion: inexact step at " + mu.to_string());
      m[mu] = num / denom;
    }
    return m;
  });
}

Integer weight_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  const auto& m = dominant_multiplicities(rs, lambda);
  auto it = m.find(rs.dominant_conjugate(mu));
  return it == m.end() ? Integer(0) : it->second;
}

const VirtualCharacter& weyl_character(const RootSystem& rs, const Weight& lambda) {
  static Memo<Key1, VirtualCharacter> memo;
  require_dominant(rs, lambda, "weyl_character");
  return memo.get({rs.label(), lambda}, [&] {
    VirtualCharacter chi;
    for (const auto& [mu, k] : dominant_multiplicities(rs, lambda))
      for (const Weight& w : rs.orbit(mu)) chi.add(w, k);
    return chi;
  });
}

bool is_weyl_invariant(const RootSystem& rs, const VirtualCharacter& chi) {
  for (const auto& [w, c] : chi.terms())
    for (std::size_t i = 0; i < rs.rank(); ++i)
      if (chi.coeff(rs.reflect(i, w)) != c) return false;
  return true;
}

std::map<Weight, Integer> decompose_virtual(const RootSystem& rs, const VirtualCharacter& chi) {
  if (!is_weyl_invariant(rs, chi)) throw std::invalid_argument("decompose_virtual: character is not Weyl invariant");
  std::map<Weight, Integer> out;
  VirtualCharacter rest = chi;
  while (!rest.is_zero()) {
    // the support point maximizing <w, 2 rho^vee> is dominant
    const Weight* best = nullptr;
    int best_h = 0;
    for (const auto& [w, c] : rest.terms()) {
      const int h = rs.two_rho_pairing(w);
      if (!best || h > best_h) {
        best = &w;
        best_h = h;
      }
    }
    const Weight lambda = *best;
    const Integer k = rest.coeff(lambda);
    out[lambda] += k;
    rest -= weyl_character(rs, lambda).scaled(k);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Integer multiplicity_of(const RootSystem& rs, const VirtualCharacter& chi, const Weight& lambda) {
  Integer m = 0;
  for (const auto& w : rs.weyl_group()) {
    const Weight shift = rs.two_rho() - w.apply(rs.two_rho());
    Weight target = lambda;
    for (std::size_t i = 0; i < target.size(); ++i) target[i] += shift[i] / 2;
    m += w.sign() * chi.coeff(target);
  }
  return m;
}

namespace {

// Dense table of P_u(beta) for all 0 <= beta <= bound in root coordinates.
class KostantTable {
 public:
  KostantTable(const RootSystem& rs, std::vector<int> bound) : bound_(std::move(bound)) {
    std::size_t size = 1;
    for (int b : bound_) size *= static_cast<std::size_t>(b + 1);
    table_.assign(size, QPolynomial());
    table_[0] = QPolynomial{1};
    const QPolynomial u{0, 1};
    for (const Weight& a : rs.positive_roots()) {
      const auto r = *rs.root_coordinates(a);
      std::vector<int> idx(bound_.size(), 0);
      for (std::size_t flat = 0; flat < size; ++flat) {
        bool fits = true;
        std::vector<int> prev(idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j) {
          prev[j] = idx[j] - r[j];
          fits = fits && prev[j] >= 0;
        }
        if (fits) table_[flat] += u * table_[index(prev)];
        for (std::size_t j = idx.size(); j-- > 0;) {
          if (++idx[j] <= bound_[j]) break;
          idx[j] = 0;
        }
      }
    }
  }

  QPolynomial at(const std::vector<int>& c) const {
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j] < 0 || c[j] > bound_[j]) return {};
    return table_[index(c)];
  }

 private:
  std::size_t index(const std::vector<int>& c) const {
    std::size_t k = 0;
    for (std::size_t j = 0; j < c.size(); ++j) k = k * static_cast<std::size_t>(bound_[j] + 1) + static_cast<std::size_t>(c[j]);
    return k;
  }
  std::vector<int> bound_;
  std::vector<QPolynomial> table_;
};

}  // namespace

QPolynomial q_kostant_partition(const RootSystem& rs, const Weight& beta) {
  auto c = rs.root_coordinates(beta);
  if (!c) return {};
  for (int x : *c)
    if (x < 0) return {};
  return KostantTable(rs, *c).at(*c);
}

QPolynomial lusztig_q_mult(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  static Memo<Key2, QPolynomial> memo;
  require_dominant(rs, lambda, "lusztig_q_mult");
  require_dominant(rs, mu, "lusztig_q_mult");
  return memo.get({rs.label(), lambda, mu}, [&] {
    if (!rs.dominance_leq(mu, lambda)) return QPolynomial();
    const auto bound = *rs.root_coordinates(lambda - mu);
    const KostantTable table(rs, bound);
    const Weight shifted = 2 * lambda + rs.two_rho();
    QPolynomial m;
    for (const auto& w : rs.weyl_group()) {
      Weight twice = w.apply(shifted) - rs.two_rho() - 2 * mu;
      Weight beta(twice.size());
      for (std::size_t i = 0; i < twice.size(); ++i) beta[i] = twice[i] / 2;
      auto c = rs.root_coordinates(beta);
      if (!c) continue;
      const QPolynomial p = table.at(*c);
      if (w.sign() > 0) m += p;
      else m -= p;
    }
    return m;
  });
}

QPolynomial lusztig_kato(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  if (!rs.is_dominant(mu) || !rs.is_dominant(lambda) || !rs.dominance_leq(mu, lambda))
    throw std::invalid_argument("lusztig_kato: need dominant mu <= lambda, got mu=" + mu.to_string() +
                                " lambda=" + lambda.to_string());
  return lusztig_q_mult(rs, lambda, mu).reversed(rs.height(lambda - mu));
}

VirtualCharacter adjoint_character(const RootSystem& rs) {
  VirtualCharacter g;
  for (const Weight& a : rs.positive_roots()) {
    g.add(a, 1);
    g.add(-a, 1);
  }
  g.add(rs.zero(), static_cast<long long>(rs.torus_rank()));
  return g;
}

std::vector<VirtualCharacter> sym_adjoint_graded(const RootSystem& rs, int J) {
  static std::shared_mutex mu;
  static std::map<std::string, std::vector<VirtualCharacter>> cache;
  if (J < 0) throw std::invalid_argument("sym_adjoint_graded: J < 0");
  {
    std::shared_lock lock(mu);
    auto it = cache.find(rs.label());
    if (it != cache.end() && static_cast<int>(it->second.size()) > J)
      return {it->second.begin(), it->second.begin() + J + 1};
  }
  const VirtualCharacter g = adjoint_character(rs);
  std::vector<VirtualCharacter> adams{VirtualCharacter()};
  std::vector<VirtualCharacter> sym{VirtualCharacter::single(rs.zero(), 1)};
  for (int j = 1; j <= J; ++j) {
    adams.push_back(g.adams(j));
    VirtualCharacter acc;
    for (int k = 1; k <= j; ++k) acc += adams[static_cast<std::size_t>(k)] * sym[static_cast<std::size_t>(j - k)];
    sym.push_back(acc.map_coeffs([j](const Weight& w, const Integer& c) {
      if (c % j != 0) throw std::logic_error("sym_adjoint_graded: inexact division at " + w.to_string());
      return Integer(c / j);
    }));
  }
  std::unique_lock lock(mu);
  auto& slot = cache[rs.label()];
  if (slot.size() < sym.size()) slot = sym;
  return sym;
}

QPolynomial invariant_factor(const RootSystem& rs) {
  QPolynomial f{1};
  for (int m : rs.exponents()) f = f * (QPolynomial{1} - QPolynomial::monomial(m + 1));
  return f;
}

std::vector<VirtualCharacter> harmonic_characters(const RootSystem& rs, int J) {
  const auto sym = sym_adjoint_graded(rs, J);
  const QPolynomial f = invariant_factor(rs);
  std::vector<VirtualCharacter> h(static_cast<std::size_t>(J + 1));
  for (int j = 0; j <= J; ++j)
    for (int i = 0; i <= std::min(j, f.degree()); ++i)
      if (f.coeff(i) != 0) h[static_cast<std::size_t>(j)] += sym[static_cast<std::size_t>(j - i)].scaled(f.coeff(i));
  return h;
}

std::vector<Integer> harmonic_multiplicities(const RootSystem& rs, const Weight& lambda, int J) {
  require_dominant(rs, lambda, "harmonic_multiplicities");
  std::vector<Integer> out;
  for (const auto& h : harmonic_characters(rs, J)) out.push_back(multiplicity_of(rs, h, lambda));
  return out;
}

std::vector<int> generalized_exponents(const RootSystem& rs, const Weight& lambda, int J) {
  const auto mult = harmonic_multiplicities(rs, lambda, J);
  std::vector<int> out;
  for (int j = 0; j <= J; ++j) {
    const Integer& m = mult[static_cast<std::size_t>(j)];
    if (m < 0) throw std::logic_error("generalized_exponents: negative harmonic multiplicity");
    for (Integer k = 0; k < m; ++k) out.push_back(j);
  }
  const Integer expected = weight_multiplicity(rs, lambda, rs.zero());
  if (Integer(out.size()) < expected)
    throw std::domain_error("generalized_exponents: J=" + std::to_string(J) + " is too small for " + lambda.to_string() +
                            " (found " + std::to_string(out.size()) + " of " + expected.str() + ")");
  return out;
}

Rational evaluate_character(const VirtualCharacter& chi, const std::vector<Rational>& point) {
  Rational s = 0;
  for (const auto& [w, c] : chi.terms()) {
    if (w.size() != point.size()) throw std::invalid_argument("evaluate_character: rank mismatch");
    Rational term(c);
    for (std::size_t i = 0; i < w.size(); ++i) term *= rpow(point[i], w[i]);
    s += term;
  }
  return s;
}

}  // namespace sphecke
