#include "sphecke/padic/series_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sphecke {

namespace {

int mod(long long a, int p) {
  const long long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int inverse_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  throw std::domain_error("inverse_mod: not invertible");
}

}  // namespace

PiPoly PiPoly::monomial(int p, int exponent, int coeff) {
  PiPoly r(p);
  r.set(exponent, coeff);
  return r;
}

int PiPoly::coeff(int exponent) const {
  const int k = exponent - lo_;
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

void PiPoly::trim() {
  std::size_t a = 0;
  while (a < c_.size() && c_[a] == 0) ++a;
  if (a == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  std::size_t b = c_.size();
  while (c_[b - 1] == 0) --b;
  c_ = std::vector<int>(c_.begin() + static_cast<std::ptrdiff_t>(a), c_.begin() + static_cast<std::ptrdiff_t>(b));
  lo_ += static_cast<int>(a);
}

void PiPoly::set(int exponent, int coeff) {
  coeff = mod(coeff, p_);
  if (c_.empty()) {
    if (coeff == 0) return;
    lo_ = exponent;
    c_.assign(1, coeff);
    return;
  }
  if (exponent < lo_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - exponent), 0);
    lo_ = exponent;
  }
  const auto k = static_cast<std::size_t>(exponent - lo_);
  if (k >= c_.size()) c_.resize(k + 1, 0);
  c_[k] = coeff;
  trim();
}

PiPoly PiPoly::truncated(int bound) const {
  PiPoly r(p_);
  for (int e = lo_; e <= top_exponent() && e < bound; ++e)
    if (coeff(e)) r.set(e, coeff(e));
  return r;
}

PiPoly PiPoly::shifted(int k) const {
  PiPoly r = *this;
  if (!r.c_.empty()) r.lo_ += k;
  return r;
}

PiPoly& PiPoly::operator+=(const PiPoly& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) {
    c_ = o.c_;
    lo_ = o.lo_;
    p_ = o.p_;
    return *this;
  }
  if (o.p_ != p_) throw std::invalid_argument("PiPoly: mismatched primes");
  const int lo = std::min(lo_, o.lo_);
  const int hi = std::max(top_exponent(), o.top_exponent());
  std::vector<int> c(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t k = 0; k < c_.size(); ++k) c[static_cast<std::size_t>(lo_ - lo) + k] = c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) {
    int& x = c[static_cast<std::size_t>(o.lo_ - lo) + k];
    x = (x + o.c_[k]) % p_;
  }
  c_ = std::move(c);
  lo_ = lo;
  trim();
  return *this;
}

PiPoly operator-(PiPoly a) {
  for (int& x : a.c_) x = (a.p_ - x) % a.p_;
  return a;
}

PiPoly& PiPoly::operator-=(const PiPoly& o) { return *this += -o; }

PiPoly operator*(const PiPoly& a, const PiPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return PiPoly(a.c_.empty() ? a.p_ : b.p_);
  if (a.p_ != b.p_) throw std::invalid_argument("PiPoly: mismatched primes");
  PiPoly r(a.p_);
  r.lo_ = a.lo_ + b.lo_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] = (r.c_[i + j] + a.c_[i] * b.c_[j]) % a.p_;
  }
  r.trim();
  return r;
}

PiPoly PiPoly::inverse(int precision) const {
  if (c_.empty()) throw std::domain_error("PiPoly::inverse of zero");
  // (pi^v e)^{-1} with e a unit: invert e term by term
  const int inv0 = inverse_mod(c_[0], p_);
  std::vector<int> r(static_cast<std::size_t>(precision), 0);
  for (int k = 0; k < precision; ++k) {
    long long s = k == 0 ? 1 : 0;
    for (int j = 1; j <= k && j < static_cast<int>(c_.size()); ++j)
      s -= static_cast<long long>(c_[static_cast<std::size_t>(j)]) * r[static_cast<std::size_t>(k - j)];
    r[static_cast<std::size_t>(k)] = mod(s * inv0, p_);
  }
  PiPoly out(p_);
  for (int k = 0; k < precision; ++k)
    if (r[static_cast<std::size_t>(k)]) out.set(k - lo_, r[static_cast<std::size_t>(k)]);
  return out;
}

std::string PiPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int e = lo_; e <= top_exponent(); ++e) {
    const int c = coeff(e);
    if (!c) continue;
    if (!s.empty()) s += " + ";
    s += std::to_string(c);
    if (e != 0) s += "*pi^" + std::to_string(e);
  }
  return s;
}

SeriesMatrix::SeriesMatrix(int n, int p) : n_(n), p_(p), e_(static_cast<std::size_t>(n * n), PiPoly(p)) {}

SeriesMatrix SeriesMatrix::identity(int n, int p) {
  SeriesMatrix m(n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = PiPoly::monomial(p, 0);
  return m;
}

SeriesMatrix SeriesMatrix::torus(const Weight& w, int p) {
  const int n = static_cast<int>(w.size());
  SeriesMatrix m(n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = PiPoly::monomial(p, w[static_cast<std::size_t>(i)]);
  return m;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.n_ != b.n_ || a.p_ != b.p_) throw std::invalid_argument("SeriesMatrix: shape or prime mismatch");
  SeriesMatrix r(a.n_, a.p_);
  for (int i = 0; i < a.n_; ++i)
    for (int j = 0; j < a.n_; ++j)
      for (int k = 0; k < a.n_; ++k)
        if (!a.at(i, k).is_zero() && !b.at(k, j).is_zero()) r.at(i, j) += a.at(i, k) * b.at(k, j);
  return r;
}

PiPoly SeriesMatrix::minor(const std::vector<int>& rows, const std::vector<int>& cols) const {
  const std::size_t k = rows.size();
  if (k == 0) return PiPoly::monomial(p_, 0);
  if (k == 1) return at(rows[0], cols[0]);
  PiPoly det(p_);
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t c = 0; c < k; ++c) {
    const PiPoly& a = at(rows[0], cols[c]);
    if (a.is_zero()) continue;
    std::vector<int> sub_cols;
    for (std::size_t j = 0; j < k; ++j)
      if (j != c) sub_cols.push_back(cols[j]);
    const PiPoly t = a * minor(sub_rows, sub_cols);
    if (c % 2) det -= t;
    else det += t;
  }
  return det;
}

PiPoly SeriesMatrix::determinant() const {
  std::vector<int> all(static_cast<std::size_t>(n_));
  std::iota(all.begin(), all.end(), 0);
  return minor(all, all);
}

bool SeriesMatrix::is_upper_triangular() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < i; ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

SeriesMatrix SeriesMatrix::inverse_upper_triangular() const {
  if (!is_upper_triangular()) throw std::invalid_argument("inverse_upper_triangular: not upper triangular");
  SeriesMatrix inv(n_, p_);
  std::vector<PiPoly> dinv(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    const PiPoly& d = at(i, i);
    if (d.is_zero() || d.top_exponent() != d.valuation())
      throw std::invalid_argument("inverse_upper_triangular: diagonal entry is not a monomial");
    dinv[static_cast<std::size_t>(i)] = PiPoly::monomial(p_, -d.valuation(), inverse_mod(d.coeff(d.valuation()), p_));
  }
  // back substitution, column by column
  for (int j = 0; j < n_; ++j) {
    inv.at(j, j) = dinv[static_cast<std::size_t>(j)];
    for (int i = j - 1; i >= 0; --i) {
      PiPoly s(p_);
      for (int k = i + 1; k <= j; ++k)
        if (!at(i, k).is_zero() && !inv.at(k, j).is_zero()) s += at(i, k) * inv.at(k, j);
      inv.at(i, j) = -(dinv[static_cast<std::size_t>(i)] * s);
    }
  }
  return inv;
}

std::string SeriesMatrix::to_string() const {
  std::string s = "[";
  for (int i = 0; i < n_; ++i) {
    s += i ? "; [" : "[";
    for (int j = 0; j < n_; ++j) s += (j ? ", " : "") + at(i, j).to_string();
    s += "]";
  }
  return s + "]";
}

Weight cartan_invariant(const SeriesMatrix& m) {
  const int n = m.size();
  std::vector<int> d(static_cast<std::size_t>(n + 1), 0);
  std::vector<std::vector<int>> by_size(static_cast<std::size_t>(n + 1));
  std::vector<std::vector<int>> subsets(1u << n);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) subsets[mask].push_back(i);
    by_size[subsets[mask].size()].push_back(static_cast<int>(mask));
  }
  for (int k = 1; k <= n; ++k) {
    int best = INT_MAX;
    for (int r : by_size[static_cast<std::size_t>(k)])
      for (int c : by_size[static_cast<std::size_t>(k)])
        best = std::min(best, m.minor(subsets[static_cast<std::size_t>(r)], subsets[static_cast<std::size_t>(c)]).valuation());
    if (best == INT_MAX) throw std::domain_error("cartan_invariant: singular matrix");
    d[static_cast<std::size_t>(k)] = best;
  }
  Weight lambda(static_cast<std::size_t>(n));
  // d_k is the sum of the k smallest invariants
  for (int k = 1; k <= n; ++k) lambda[static_cast<std::size_t>(n - k)] = d[static_cast<std::size_t>(k)] - d[static_cast<std::size_t>(k - 1)];
  return lambda;
}

IwasawaData iwasawa(const SeriesMatrix& g0, int precision) {
  const int n = g0.size();
  const int p = g0.prime();
  int lo = INT_MAX, hi = INT_MIN;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!g0.at(i, j).is_zero()) {
        lo = std::min(lo, g0.at(i, j).valuation());
        hi = std::max(hi, g0.at(i, j).top_exponent());
      }
  if (lo == INT_MAX) throw std::domain_error("iwasawa: zero matrix");
  const int prec = precision + (hi - lo) * n;
  SeriesMatrix g = g0;
  // right multiplication by K: clear the strict lower triangle row by row
  for (int i = n - 1; i >= 0; --i) {
    int pivot = -1, best = INT_MAX;
    for (int j = 0; j <= i; ++j)
      if (g.at(i, j).valuation() < best) {
        best = g.at(i, j).valuation();
        pivot = j;
      }
    if (pivot < 0) throw std::domain_error("iwasawa: singular matrix");
    if (pivot != i)
      for (int r = 0; r < n; ++r) std::swap(g.at(r, pivot), g.at(r, i));
    const PiPoly inv = g.at(i, i).inverse(prec);
    for (int j = 0; j < i; ++j) {
      if (g.at(i, j).is_zero()) continue;
      const PiPoly f = (g.at(i, j) * inv).truncated(prec);
      for (int r = 0; r < n; ++r) g.at(r, j) = (g.at(r, j) - f * g.at(r, i)).truncated(hi + prec);
      g.at(i, j) = PiPoly(p);
    }
  }
  IwasawaData out;
  out.mu = Weight(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.mu[static_cast<std::size_t>(i)] = g.at(i, i).valuation();
  // u_{i,i+1} = b_{i,i+1} / b_{i+1,i+1}
  long long e = 0;
  for (int i = 0; i + 1 < n; ++i) {
    const PiPoly& b = g.at(i, i + 1);
    if (b.is_zero()) continue;
    const PiPoly q = b * g.at(i + 1, i + 1).inverse(std::max(1, prec));
    e += q.residue();
  }
  out.psi_exponent = e % p;
  return out;
}

Cyclotomic psi_value(const SeriesMatrix& u) {
  const int n = u.size();
  for (int i = 0; i < n; ++i) {
    if (!(u.at(i, i) == PiPoly::monomial(u.prime(), 0))) throw std::invalid_argument("psi_value: not unitriangular");
    for (int j = 0; j < i; ++j)
      if (!u.at(i, j).is_zero()) throw std::invalid_argument("psi_value: not upper triangular");
  }
  long long e = 0;
  for (int i = 0; i + 1 < n; ++i) e += u.at(i, i + 1).residue();
  return Cyclotomic::zeta_power(u.prime(), e);
}

}  // namespace sphecke
