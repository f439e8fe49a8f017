#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace sphecke {

// Integer coordinate vector. For GL(n) the coordinates are the usual Z^n
// coordinates; for the simple types they are Dynkin labels (coefficients in
// the basis of fundamental weights).
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t size) : c_(size, 0) {}
  explicit Weight(std::vector<int> coords) : c_(std::move(coords)) {}
  Weight(std::initializer_list<int> coords) : c_(coords) {}

  std::size_t size() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  const std::vector<int>& coords() const { return c_; }

  int sum() const {
    int s = 0;
    for (int x : c_) s += x;
    return s;
  }
  bool is_zero() const {
    for (int x : c_)
      if (x != 0) return false;
    return true;
  }

  Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) {
    for (int& x : a.c_) x = -x;
    return a;
  }
  friend Weight operator*(int k, Weight a) {
    for (int& x : a.c_) x *= k;
    return a;
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  // "2,1,0"
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c_[i]);
    }
    return s;
  }

 private:
  std::vector<int> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Weight& w) {
  return os << '(' << w.to_string() << ')';
}

// Parses "2,1,0" (spaces tolerated). Throws std::invalid_argument.
Weight parse_weight(const std::string& text);

}  // namespace sphecke
