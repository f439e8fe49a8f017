#include "sphecke/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace sphecke {

Weight WeylElement::apply(const Weight& x) const {
  Weight r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    int s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += matrix[i][j] * x[j];
    r[i] = s;
  }
  return r;
}

namespace {

struct CartanData {
  std::vector<std::vector<int>> c;
  std::vector<int> norms;
};

std::optional<CartanData> cartan_for(const std::string& label) {
  if (label == "A1") return CartanData{{{2}}, {1}};
  if (label == "A2") return CartanData{{{2, -1}, {-1, 2}}, {1, 1}};
  if (label == "A3") return CartanData{{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1}};
  if (label == "B2") return CartanData{{{2, -1}, {-2, 2}}, {2, 1}};
  if (label == "C2") return CartanData{{{2, -2}, {-1, 2}}, {1, 2}};
  if (label == "G2") return CartanData{{{2, -3}, {-1, 2}}, {1, 3}};
  return std::nullopt;
}

std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    const Rational d = a[col][col];
    for (auto& x : a[col]) x /= d;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

void RootSystem::check(const Weight& x) const {
  if (x.size() != dim_)
    throw std::invalid_argument(label_ + ": weight " + x.to_string() + " has wrong rank");
}

int RootSystem::pair(const Weight& x, const Weight& coroot) {
  int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * coroot[i];
  return s;
}

RootSystem RootSystem::build(const std::string& label) {
  RootSystem rs;
  rs.label_ = label;
  if (label.size() >= 3 && label.compare(0, 2, "GL") == 0) {
    int n = 0;
    try {
      n = std::stoi(label.substr(2));
    } catch (const std::exception&) {
      throw std::invalid_argument("unsupported root system '" + label + "'");
    }
    if (n < 1 || n > 4) throw std::invalid_argument("unsupported root system '" + label + "'");
    rs.gl_ = true;
    rs.dim_ = static_cast<std::size_t>(n);
    for (int i = 0; i + 1 < n; ++i) {
      Weight a(rs.dim_);
      a[static_cast<std::size_t>(i)] = 1;
      a[static_cast<std::size_t>(i + 1)] = -1;
      rs.simple_.push_back(a);
      rs.simple_co_.push_back(a);
      rs.simple_norms_.push_back(1);
    }
  } else {
    auto cd = cartan_for(label);
    if (!cd) throw std::invalid_argument("unsupported root system '" + label + "'");
    const std::size_t l = cd->c.size();
    rs.dim_ = l;
    for (std::size_t j = 0; j < l; ++j) {
      Weight a(l), co(l);
      for (std::size_t i = 0; i < l; ++i) a[i] = cd->c[i][j];
      co[j] = 1;
      rs.simple_.push_back(a);
      rs.simple_co_.push_back(co);
    }
    rs.simple_norms_ = cd->norms;
    rs.to_root_coords_ = invert(cd->c);
  }
  rs.finish();
  return rs;
}

std::optional<std::vector<int>> RootSystem::root_coordinates(const Weight& beta) const {
  check(beta);
  const std::size_t l = rank();
  std::vector<int> c(l);
  if (gl_) {
    if (beta.sum() != 0) return std::nullopt;
    int s = 0;
    for (std::size_t k = 0; k < l; ++k) {
      s += beta[k];
      c[k] = s;
    }
    return c;
  }
  for (std::size_t i = 0; i < l; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < l; ++j) s += to_root_coords_[i][j] * beta[j];
    if (denominator(s) != 1) return std::nullopt;
    c[i] = static_cast<int>(numerator(s));
  }
  return c;
}

int RootSystem::height(const Weight& beta) const {
  auto c = root_coordinates(beta);
  if (!c) throw std::invalid_argument(label_ + ": " + beta.to_string() + " is not in the root lattice");
  int h = 0;
  for (int x : *c) h += x;
  return h;
}

Weight RootSystem::reflect(std::size_t i, const Weight& x) const {
  const int k = pair(x, simple_co_[i]);
  return x - k * simple_[i];
}

void RootSystem::finish() {
  // positive roots by closure under simple reflections
  struct Root {
    Weight root, coroot;
    int norm;
  };
  std::map<Weight, Root> all;
  std::deque<Weight> queue;
  for (std::size_t i = 0; i < rank(); ++i) {
    all.emplace(simple_[i], Root{simple_[i], simple_co_[i], simple_norms_[i]});
    queue.push_back(simple_[i]);
  }
  while (!queue.empty()) {
    const Root r = all.at(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < rank(); ++i) {
      Weight a = reflect(i, r.root);
      if (all.count(a)) continue;
      const int k = pair(simple_[i], r.coroot);
      Weight co = r.coroot - k * simple_co_[i];
      all.emplace(a, Root{a, co, r.norm});
      queue.push_back(a);
    }
  }
  std::vector<Root> pos;
  for (const auto& [w, r] : all) {
    auto c = root_coordinates(w);
    bool nonneg = true;
    for (int x : *c) nonneg = nonneg && x >= 0;
    if (nonneg) pos.push_back(r);
  }
  std::sort(pos.begin(), pos.end(), [this](const Root& a, const Root& b) {
    const int ha = height(a.root), hb = height(b.root);
    return ha != hb ? ha < hb : a.root > b.root;
  });
  for (const auto& r : pos) {
    pos_.push_back(r.root);
    pos_co_.push_back(r.coroot);
    norms_.push_back(r.norm);
  }
  two_rho_ = zero();
  for (const auto& a : pos_) two_rho_ += a;
  theta_ = pos_.empty() ? zero() : pos_.back();

  // Weyl group by breadth-first search; elements are told apart by the
  // image of the regular vector 2rho
  std::vector<std::vector<int>> id(dim_, std::vector<int>(dim_, 0));
  for (std::size_t i = 0; i < dim_; ++i) id[i][i] = 1;
  weyl_.push_back(WeylElement{id, 0, {}});
  std::set<Weight> seen{two_rho_};
  for (std::size_t head = 0; head < weyl_.size(); ++head) {
    const WeylElement w = weyl_[head];
    for (std::size_t i = 0; i < rank(); ++i) {
      WeylElement sw;
      sw.matrix = w.matrix;
      for (std::size_t c = 0; c < dim_; ++c) {
        int k = 0;
        for (std::size_t r = 0; r < dim_; ++r) k += simple_co_[i][r] * w.matrix[r][c];
        for (std::size_t r = 0; r < dim_; ++r) sw.matrix[r][c] -= k * simple_[i][r];
      }
      const Weight img = sw.apply(two_rho_);
      if (!seen.insert(img).second) continue;
      sw.length = w.length + 1;
      sw.word = w.word;
      sw.word.insert(sw.word.begin(), static_cast<int>(i));
      weyl_.push_back(std::move(sw));
    }
  }

  // exponents: P(t)(1-t)^l = prod (1 - t^{m_i + 1})
  QPolynomial f = poincare();
  for (std::size_t i = 0; i < rank(); ++i) f = f * QPolynomial{1, -1};
  while (f.degree() > 0) {
    const int d = [&] {
      for (int k = 1; k <= f.degree(); ++k)
        if (f.coeff(k) != 0) return k;
      return 0;
    }();
    if (f.coeff(d) != -1) throw std::logic_error(label_ + ": Poincare polynomial does not factor");
    std::vector<Integer> g(static_cast<std::size_t>(d + 1));
    g[0] = 1;
    g[static_cast<std::size_t>(d)] = -1;
    f = f.exact_div(QPolynomial(g));
    exponents_.push_back(d - 1);
  }
  if (gl_) exponents_.push_back(0);
  std::sort(exponents_.begin(), exponents_.end());
}

int RootSystem::two_rho_pairing(const Weight& x) const {
  check(x);
  int s = 0;
  for (const auto& co : pos_co_) s += pair(x, co);
  return s;
}

int RootSystem::form_with_root(const Weight& x, std::size_t k) const {
  return norms_[k] * pair(x, pos_co_[k]);
}

bool RootSystem::is_dominant(const Weight& x) const {
  check(x);
  for (const auto& co : simple_co_)
    if (pair(x, co) < 0) return false;
  return true;
}

bool RootSystem::is_pplus(const Weight& x) const {
  return gl_ && is_dominant(x) && (dim_ == 0 || x[dim_ - 1] >= 0);
}

bool RootSystem::dominance_leq(const Weight& mu, const Weight& lambda) const {
  auto c = root_coordinates(lambda - mu);
  if (!c) return false;
  for (int x : *c)
    if (x < 0) return false;
  return true;
}

Weight RootSystem::dominant_conjugate(const Weight& x) const {
  Weight y = x;
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (pair(y, simple_co_[i]) < 0) {
        y = reflect(i, y);
        again = true;
      }
    }
  }
  return y;
}

std::vector<Weight> RootSystem::orbit(const Weight& x) const {
  std::set<Weight> seen{x};
  std::vector<Weight> out{x};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t i = 0; i < rank(); ++i) {
      Weight y = reflect(i, out[head]);
      if (seen.insert(y).second) out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::size_t RootSystem::stabilizer_size(const Weight& x) const { return weyl_.size() / orbit(x).size(); }

QPolynomial RootSystem::stabilizer_poincare(const Weight& x) const {
  std::vector<Integer> c;
  for (const auto& w : weyl_) {
    if (w.apply(x) != x) continue;
    const auto k = static_cast<std::size_t>(w.length);
    if (c.size() <= k) c.resize(k + 1);
    c[k] += 1;
  }
  return QPolynomial(std::move(c));
}

QPolynomial RootSystem::poincare() const {
  std::vector<Integer> c;
  for (const auto& w : weyl_) {
    const auto k = static_cast<std::size_t>(w.length);
    if (c.size() <= k) c.resize(k + 1);
    c[k] += 1;
  }
  return QPolynomial(std::move(c));
}

namespace {

void sort_by_height(const RootSystem& rs, const Weight& base, std::vector<Weight>& v, bool below) {
  std::sort(v.begin(), v.end(), [&](const Weight& a, const Weight& b) {
    const int ha = below ? rs.height(base - a) : rs.height(a - base);
    const int hb = below ? rs.height(base - b) : rs.height(b - base);
    return ha != hb ? ha < hb : a > b;
  });
}

}  // namespace

std::vector<Weight> RootSystem::dominant_weights_below(const Weight& lambda) const {
  if (!is_dominant(lambda)) throw std::invalid_argument("dominant_weights_below: " + lambda.to_string() + " is not dominant");
  std::set<Weight> seen{lambda};
  std::vector<Weight> out{lambda};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& a : pos_) {
      Weight y = out[head] - a;
      if (is_dominant(y) && seen.insert(y).second) out.push_back(y);
    }
  }
  sort_by_height(*this, lambda, out, true);
  return out;
}

std::vector<Weight> RootSystem::dominant_weights_above(const Weight& mu, int max_height) const {
  if (!is_dominant(mu)) throw std::invalid_argument("dominant_weights_above: " + mu.to_string() + " is not dominant");
  std::set<Weight> seen{mu};
  std::vector<Weight> out{mu};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& a : pos_) {
      Weight y = out[head] + a;
      if (is_dominant(y) && height(y - mu) <= max_height && seen.insert(y).second) out.push_back(y);
    }
  }
  sort_by_height(*this, mu, out, false);
  return out;
}

Integer RootSystem::weyl_dimension(const Weight& lambda) const {
  Rational d = 1;
  const Weight shifted = 2 * lambda + two_rho_;
  for (const auto& co : pos_co_) d *= Rational(pair(shifted, co), pair(two_rho_, co));
  if (denominator(d) != 1) throw std::logic_error("weyl_dimension: non-integral result");
  return numerator(d);
}

const RootSystem& root_system(const std::string& label) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<RootSystem>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(label);
  if (it == registry.end())
    it = registry.emplace(label, std::make_unique<RootSystem>(RootSystem::build(label))).first;
  return *it->second;
}

}  // namespace sphecke
