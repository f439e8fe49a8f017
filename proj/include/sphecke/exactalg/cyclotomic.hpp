#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sphecke/exactalg/integer.hpp"

namespace sphecke {

// Element of Z[zeta_p], p prime, in the basis 1, zeta, ..., zeta^{p-2}
// (zeta^{p-1} is rewritten through 1 + zeta + ... + zeta^{p-1} = 0).
// For p = 2 the basis is {1} and zeta = -1.
class Cyclotomic {
 public:
  explicit Cyclotomic(int p);
  Cyclotomic(int p, const Integer& constant);

  static Cyclotomic zeta_power(int p, long long k);

  int prime() const { return p_; }
  const std::vector<Integer>& coeffs() const { return c_; }
  bool is_zero() const;
  // True iff the element lies in Z (all non-constant coordinates vanish).
  bool is_rational() const;
  const Integer& constant() const { return c_[0]; }

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(Cyclotomic a);
  friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;

  std::string to_string() const;

 private:
  void check(const Cyclotomic& o) const {
    if (o.p_ != p_) throw std::invalid_argument("Cyclotomic: mismatched primes");
  }
  // Reduces a length-p vector indexed by exponent into the canonical basis.
  static std::vector<Integer> canonical(int p, std::vector<Integer> full);

  int p_;
  std::vector<Integer> c_;
};

// Accumulates sum_k zeta^k * V_k for an additive group V (LaurentScalar,
// characters, surds, ...). Keeping one bucket per exponent lets values with
// non-integer coefficients ride along; the reduction to the canonical basis
// is the same linear map Cyclotomic uses.
template <class V>
class CyclotomicSum {
 public:
  CyclotomicSum(int p, V zero) : p_(p), buckets_(static_cast<std::size_t>(p), zero) {}

  int prime() const { return p_; }

  void add(long long zeta_exponent, const V& value) {
    long long k = zeta_exponent % p_;
    if (k < 0) k += p_;
    buckets_[static_cast<std::size_t>(k)] += value;
  }

  CyclotomicSum& operator+=(const CyclotomicSum& o) {
    for (std::size_t k = 0; k < buckets_.size(); ++k) buckets_[k] += o.buckets_[k];
    return *this;
  }

  const std::vector<V>& buckets() const { return buckets_; }

  // Coordinates in the basis 1, zeta, ..., zeta^{p-2}.
  std::vector<V> canonical() const {
    const std::size_t last = buckets_.size() - 1;
    std::vector<V> out;
    if (p_ == 2) {
      V c = buckets_[0];
      c -= buckets_[1];
      out.push_back(c);
      return out;
    }
    for (std::size_t k = 0; k < last; ++k) {
      V c = buckets_[k];
      c -= buckets_[last];
      out.push_back(c);
    }
    return out;
  }

  // True iff the sum lies in V itself (no zeta-dependence survives).
  bool in_base_ring() const {
    auto c = canonical();
    for (std::size_t k = 1; k < c.size(); ++k)
      if (!is_zero(c[k])) return false;
    return true;
  }

  // The base-ring value; meaningful only when in_base_ring().
  V base_value() const { return canonical().front(); }

  // The same sum with zeta replaced by zeta^{-1}.
  CyclotomicSum conjugate() const {
    CyclotomicSum r = *this;
    for (std::size_t k = 1; k < buckets_.size(); ++k)
      r.buckets_[k] = buckets_[buckets_.size() - k];
    return r;
  }

 private:
  int p_;
  std::vector<V> buckets_;
};

}  // namespace sphecke
