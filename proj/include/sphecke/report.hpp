#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "sphecke/exactalg.hpp"
#include "sphecke/hecke.hpp"

namespace sphecke {

inline constexpr int kReportSchema = 1;

nlohmann::json to_json(const Integer& x);
nlohmann::json to_json(const Rational& x);
nlohmann::json to_json(const Weight& w);
// [[v_exponent, coeff], ...]
nlohmann::json to_json(const LaurentScalar& x);
nlohmann::json to_json(const SurdNumber& x);
nlohmann::json to_json(const VirtualCharacter& x);
nlohmann::json to_json(const LaurentCharacter& x);
nlohmann::json to_json(const SurdCharacter& x);
nlohmann::json to_json(const QPolynomial& p);
// {"basis": "c", "terms": [{"weight": [...], "coeff_v": [[e, c], ...]}]}
nlohmann::json to_json(const HeckeElement& h);

// Outcome of one verification run.
struct CheckReport {
  std::string claim;
  bool pass = true;
  nlohmann::json lhs = nlohmann::json::array();
  nlohmann::json rhs = nlohmann::json::array();
  std::uint64_t enumerated = 0;
  double elapsed = 0;  // seconds
  std::vector<std::string> failures;
  nlohmann::json details = nlohmann::json::object();

  void fail(std::string what) {
    pass = false;
    if (failures.size() < 20) failures.push_back(std::move(what));
  }
  void absorb(const CheckReport& sub);
  nlohmann::json to_json() const;
};

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace sphecke
