#pragma once

#include <map>
#include <sstream>
#include <string>

#include "sphecke/exactalg/integer.hpp"
#include "sphecke/exactalg/laurent.hpp"
#include "sphecke/exactalg/surd.hpp"
#include "sphecke/weight.hpp"

namespace sphecke {

inline bool is_zero(const Integer& x) { return x == 0; }
inline bool is_zero(const Rational& x) { return x == 0; }

// Finite formal sum of torus monomials e^w with coefficients in C. With
// C = Integer this is a virtual character; with C = LaurentScalar it carries
// the q-dependence of Hecke-algebra values alongside.
template <class C>
class Character {
 public:
  using Coeff = C;

  Character() = default;

  static Character single(const Weight& w, const C& c) {
    Character r;
    r.add(w, c);
    return r;
  }

  bool is_zero() const { return m_.empty(); }
  const std::map<Weight, C>& terms() const { return m_; }
  std::size_t size() const { return m_.size(); }

  C coeff(const Weight& w) const {
    auto it = m_.find(w);
    return it == m_.end() ? C{} : it->second;
  }

  void add(const Weight& w, const C& c) {
    if (sphecke::is_zero(c)) return;
    auto [it, inserted] = m_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (sphecke::is_zero(it->second)) m_.erase(it);
    }
  }

  Character& operator+=(const Character& o) {
    for (const auto& [w, c] : o.m_) add(w, c);
    return *this;
  }
  Character& operator-=(const Character& o) {
    for (const auto& [w, c] : o.m_) add(w, -c);
    return *this;
  }
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator-(Character a) {
    for (auto& [w, c] : a.m_) c = -c;
    return a;
  }

  // Weight-support convolution.
  friend Character operator*(const Character& a, const Character& b) {
    Character r;
    for (const auto& [wa, ca] : a.m_)
      for (const auto& [wb, cb] : b.m_) r.add(wa + wb, ca * cb);
    return r;
  }

  template <class S>
  Character scaled(const S& s) const {
    Character r;
    for (const auto& [w, c] : m_) r.add(w, c * s);
    return r;
  }

  // Adams operation: e^w -> e^{k w}.
  Character adams(int k) const {
    Character r;
    for (const auto& [w, c] : m_) r.add(k * w, c);
    return r;
  }

  // Replaces each coefficient c at e^w by f(w, c).
  template <class F>
  Character map_coeffs(F&& f) const {
    Character r;
    for (const auto& [w, c] : m_) r.add(w, f(w, c));
    return r;
  }

  friend bool operator==(const Character&, const Character&) = default;

  std::string to_string() const {
    if (m_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : m_) {
      if (!first) os << " + ";
      first = false;
      os << '[' << coeff_string(c) << "]e^" << w;
    }
    return os.str();
  }

 private:
  static std::string coeff_string(const C& c) {
    if constexpr (std::is_same_v<C, Integer> || std::is_same_v<C, Rational>) {
      return c.str();
    } else {
      return c.to_string();
    }
  }

  std::map<Weight, C> m_;
};

template <class C>
bool is_zero(const Character<C>& x) {
  return x.is_zero();
}

using VirtualCharacter = Character<Integer>;
using LaurentCharacter = Character<LaurentScalar>;
using SurdCharacter = Character<SurdNumber>;

template <class To, class From>
Character<To> lift_character(const Character<From>& x) {
  Character<To> r;
  for (const auto& [w, c] : x.terms()) r.add(w, To(c));
  return r;
}

inline LaurentCharacter operator*(const LaurentScalar& s, const VirtualCharacter& x) {
  LaurentCharacter r;
  for (const auto& [w, c] : x.terms()) r.add(w, s * LaurentScalar(c));
  return r;
}

inline VirtualCharacter operator*(const Integer& k, const VirtualCharacter& x) { return x.scaled(k); }

// Specializes every coefficient to the number q.
inline SurdCharacter evaluate_at_q(const LaurentCharacter& x, int q) {
  SurdCharacter r;
  for (const auto& [w, c] : x.terms()) r.add(w, SurdNumber::evaluate(c, q));
  return r;
}

// Character at weight 0 of the given dimension, i.e. the constant c.
template <class C>
Character<C> constant_character(std::size_t dim, const C& c) {
  return Character<C>::single(Weight(dim), c);
}

}  // namespace sphecke
