#include "sphecke/exactalg/cyclotomic.hpp"

namespace sphecke {

namespace {

void check_prime(int p) {
  if (p < 2) throw std::invalid_argument("Cyclotomic: p must be a prime >= 2");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("Cyclotomic: p must be prime");
}

std::size_t basis_size(int p) { return p == 2 ? 1 : static_cast<std::size_t>(p - 1); }

}  // namespace

Cyclotomic::Cyclotomic(int p) : p_(p) {
  check_prime(p);
  c_.assign(basis_size(p), Integer(0));
}

Cyclotomic::Cyclotomic(int p, const Integer& constant) : Cyclotomic(p) { c_[0] = constant; }

std::vector<Integer> Cyclotomic::canonical(int p, std::vector<Integer> full) {
  if (p == 2) return {full[0] - full[1]};
  std::vector<Integer> out(static_cast<std::size_t>(p - 1));
  const Integer& top = full[static_cast<std::size_t>(p - 1)];
  for (std::size_t k = 0; k + 1 < full.size(); ++k) out[k] = full[k] - top;
  return out;
}

Cyclotomic Cyclotomic::zeta_power(int p, long long k) {
  Cyclotomic r(p);
  long long e = k % p;
  if (e < 0) e += p;
  std::vector<Integer> full(static_cast<std::size_t>(p));
  full[static_cast<std::size_t>(e)] = 1;
  r.c_ = canonical(p, std::move(full));
  return r;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  check(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  a.check(b);
  const int p = a.p_;
  std::vector<Integer> full(static_cast<std::size_t>(p));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      // for p = 2 the lone basis element is 1, so exponents stay at 0
      full[(i + j) % static_cast<std::size_t>(p)] += a.c_[i] * b.c_[j];
    }
  }
  Cyclotomic r(p);
  r.c_ = Cyclotomic::canonical(p, std::move(full));
  return r;
}

Cyclotomic operator-(Cyclotomic a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

std::string Cyclotomic::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!s.empty()) s += " + ";
    s += c_[k].str();
    if (k > 0) s += "*z^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

}  // namespace sphecke
