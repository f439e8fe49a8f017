#include "sphecke/report.hpp"

namespace sphecke {

using nlohmann::json;

json to_json(const Integer& x) {
  if (fits_int64(x)) return json(static_cast<long long>(x));
  return json(x.str());
}

json to_json(const Rational& x) {
  if (denominator(x) == 1) return to_json(Integer(numerator(x)));
  return json(x.str());
}

json to_json(const Weight& w) { return json(w.coords()); }

json to_json(const LaurentScalar& x) {
  json a = json::array();
  for (const auto& [e, c] : x.terms()) a.push_back(json::array({e, to_json(c)}));
  return a;
}

json to_json(const SurdNumber& x) {
  return json{{"q", x.q()}, {"rational", to_json(x.rational_part())}, {"v", to_json(x.v_part())}};
}

json to_json(const QPolynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

namespace {

template <class C>
json character_json(const Character<C>& x, const char* key) {
  json a = json::array();
  for (const auto& [w, c] : x.terms()) a.push_back(json{{"weight", to_json(w)}, {key, to_json(c)}});
  return a;
}

}  // namespace

json to_json(const VirtualCharacter& x) { return character_json(x, "coeff"); }
json to_json(const LaurentCharacter& x) { return character_json(x, "coeff_v"); }
json to_json(const SurdCharacter& x) { return character_json(x, "coeff"); }

json to_json(const HeckeElement& h) {
  json terms = json::array();
  for (const auto& [w, c] : h.coeffs()) terms.push_back(json{{"weight", to_json(w)}, {"coeff_v", to_json(c)}});
  return json{{"basis", "c"}, {"terms", terms}};
}

void CheckReport::absorb(const CheckReport& sub) {
  enumerated += sub.enumerated;
  for (const auto& f : sub.failures)
    if (failures.size() < 20) failures.push_back(f);
  if (!sub.pass) pass = false;
}

json CheckReport::to_json() const {
  return json{{"schema", kReportSchema}, {"claim", claim},       {"pass", pass},
              {"lhs", lhs},              {"rhs", rhs},           {"enumerated", enumerated},
              {"elapsed", elapsed},      {"failures", failures}, {"details", details}};
}

}  // namespace sphecke
