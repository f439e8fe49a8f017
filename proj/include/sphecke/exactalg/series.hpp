#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "sphecke/exactalg/integer.hpp"
#include "sphecke/exactalg/qpolynomial.hpp"

namespace sphecke {

// Power series in u = q^{-1}, exact through degree order(). Binary operations
// keep the smaller of the two truncation orders.
template <class R>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = 0) : c_(static_cast<std::size_t>(order + 1)) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
  }
  TruncatedSeries(int order, const R& constant) : TruncatedSeries(order) { c_[0] = constant; }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  R& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<R>& coeffs() const { return c_; }

  TruncatedSeries truncated(int order) const {
    TruncatedSeries r(std::min(order, this->order()));
    for (int k = 0; k <= r.order(); ++k) r[k] = (*this)[k];
    return r;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    shrink(o.order());
    for (int k = 0; k <= order(); ++k) (*this)[k] += o[k];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    shrink(o.order());
    for (int k = 0; k <= order(); ++k) (*this)[k] -= o[k];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  // Adds c * u^k (ignored beyond the truncation order).
  void add_term(int k, const R& c) {
    if (k >= 0 && k <= order()) (*this)[k] += c;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void shrink(int order) {
    if (order < this->order()) c_.resize(static_cast<std::size_t>(order + 1));
  }
  std::vector<R> c_;
};

// Cauchy product; the coefficient type is whatever A * B yields.
template <class A, class B>
auto series_product(const TruncatedSeries<A>& a, const TruncatedSeries<B>& b) {
  using R = decltype(a[0] * b[0]);
  const int n = std::min(a.order(), b.order());
  TruncatedSeries<R> r(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline TruncatedSeries<Integer> series_from_polynomial(const QPolynomial& p, int order) {
  TruncatedSeries<Integer> r(order);
  for (int k = 0; k <= std::min(order, p.degree()); ++k) r[k] = p.coeff(k);
  return r;
}

// Inverse of an integer series whose constant term is +1 or -1.
inline TruncatedSeries<Integer> series_inverse(const TruncatedSeries<Integer>& a) {
  const Integer c0 = a[0];
  if (c0 != 1 && c0 != -1) throw std::domain_error("series_inverse: constant term is not a unit");
  TruncatedSeries<Integer> r(a.order());
  r[0] = c0;
  for (int k = 1; k <= a.order(); ++k) {
    Integer s = 0;
    for (int j = 1; j <= k; ++j) s += a[j] * r[k - j];
    r[k] = -s * c0;
  }
  return r;
}

}  // namespace sphecke
