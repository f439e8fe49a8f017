#include "sphecke/padic.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "sphecke/charring.hpp"
#include "sphecke/laumon.hpp"

namespace sphecke {

namespace {

const RootSystem& gl(int n) { return root_system("GL" + std::to_string(n)); }

SurdNumber surd(const LaurentScalar& x, int p) { return SurdNumber::evaluate(x, p); }

SurdNumber surd_int(std::uint64_t k, int p) { return SurdNumber(p, Rational(Integer(k))); }

// q^{(nu,rho)} = v^{-2(nu,rho)}
SurdNumber q_rho(const RootSystem& rs, const Weight& nu, int p) {
  return surd(LaurentScalar::monomial(-rs.two_rho_pairing(nu)), p);
}

void require_prime(int p) {
  bool prime = p >= 2;
  for (int d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
  if (!prime) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
}

struct BoxEntry {
  int row, col, lo, len;
};

std::vector<BoxEntry> box_entries(const EnumerationBounds& b) {
  std::vector<BoxEntry> out;
  const int n = static_cast<int>(b.pole.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int d = b.pole[static_cast<std::size_t>(j)];
      out.push_back({i, j, -d, d + b.precision});
    }
  return out;
}

void scan_range(const Weight& nu, int p, const std::vector<BoxEntry>& entries, int total_digits, std::uint64_t begin,
                std::uint64_t end, std::map<std::pair<Weight, int>, std::uint64_t>& out) {
  if (begin >= end) return;
  std::vector<int> digit(static_cast<std::size_t>(total_digits), 0);
  std::uint64_t x = begin;
  for (int k = total_digits - 1; k >= 0; --k) {
    digit[static_cast<std::size_t>(k)] = static_cast<int>(x % static_cast<std::uint64_t>(p));
    x /= static_cast<std::uint64_t>(p);
  }
  SeriesMatrix m = SeriesMatrix::torus(nu, p);
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    long long res = 0;
    int pos = 0;
    for (const auto& e : entries) {
      PiPoly u(p);
      // leading (highest) exponent first
      for (int k = 0; k < e.len; ++k, ++pos) {
        const int c = digit[static_cast<std::size_t>(pos)];
        if (!c) continue;
        const int exponent = e.lo + e.len - 1 - k;
        u.set(exponent, c);
        if (exponent == -1 && e.col == e.row + 1) res += c;
      }
      m.at(e.row, e.col) = u.shifted(nu[static_cast<std::size_t>(e.col)]);
    }
    ++out[{cartan_invariant(m), static_cast<int>(res % p)}];
    for (int k = total_digits - 1; k >= 0; --k) {
      int& d = digit[static_cast<std::size_t>(k)];
      if (++d < p) break;
      d = 0;
    }
  }
}

std::mutex g_table_mutex;
std::map<std::tuple<Weight, int, EnumerationBounds>, std::unique_ptr<OrbitTable>> g_tables;

}  // namespace

EnumerationBounds EnumerationBounds::defaults(const Weight& nu) {
  EnumerationBounds b;
  b.pole = nu.coords();
  b.precision = nu.size() ? nu[0] - nu[nu.size() - 1] + 1 : 1;
  return b;
}

EnumerationBounds EnumerationBounds::widened(int extra_pole, int extra_precision) const {
  EnumerationBounds b = *this;
  for (int& d : b.pole) d += extra_pole;
  b.precision += extra_precision;
  return b;
}

int EnumerationBounds::digits() const {
  int t = 0;
  for (std::size_t j = 0; j < pole.size(); ++j) t += static_cast<int>(j) * (pole[j] + precision);
  return t;
}

int EnumerationBounds::pole_volume() const {
  int t = 0;
  for (std::size_t j = 0; j < pole.size(); ++j) t += static_cast<int>(j) * pole[j];
  return t;
}

SurdNumber OrbitTable::representative_volume() const {
  const int n = static_cast<int>(nu.size());
  return SurdNumber(p, Rational(Integer(1), ipow(Integer(p), static_cast<unsigned>(bounds.precision * n * (n - 1) / 2))));
}

const OrbitTable& enumerate_orbits(const Weight& nu, int p, const EnumerationBounds& bounds, int jobs) {
  const auto key = std::make_tuple(nu, p, bounds);
  {
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto it = g_tables.find(key);
    if (it != g_tables.end()) return *it->second;
  }
  require_prime(p);
  const int n = static_cast<int>(nu.size());
  if (static_cast<int>(bounds.pole.size()) != n) throw std::invalid_argument("enumerate_orbits: bounds size");
  for (int j = 1; j < n; ++j)
    if (bounds.pole[static_cast<std::size_t>(j)] < nu[static_cast<std::size_t>(j)])
      throw std::invalid_argument("enumerate_orbits: pole bound below nu_j misses part of the support");
  if (n > 1 && bounds.precision < nu[0] - nu[static_cast<std::size_t>(n - 1)])
    throw std::invalid_argument("enumerate_orbits: precision below nu_1 - nu_n is not invariant");
  const auto entries = box_entries(bounds);
  const int digits = bounds.digits();
  double bits = digits * std::log2(static_cast<double>(p));
  if (bits > 40) throw std::invalid_argument("enumerate_orbits: box too large (" + std::to_string(digits) + " digits)");
  std::uint64_t total = 1;
  for (int k = 0; k < digits; ++k) total *= static_cast<std::uint64_t>(p);

  auto table = std::make_unique<OrbitTable>();
  table->nu = nu;
  table->p = p;
  table->bounds = bounds;
  table->enumerated = total;
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::min<std::uint64_t>(total, 256))));
  std::vector<std::map<std::pair<Weight, int>, std::uint64_t>> parts(static_cast<std::size_t>(jobs));
  if (jobs == 1) {
    scan_range(nu, p, entries, digits, 0, total, parts[0]);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) {
      const std::uint64_t b = total * static_cast<std::uint64_t>(t) / static_cast<std::uint64_t>(jobs);
      const std::uint64_t e = total * static_cast<std::uint64_t>(t + 1) / static_cast<std::uint64_t>(jobs);
      threads.emplace_back(scan_range, std::cref(nu), p, std::cref(entries), digits, b, e,
                           std::ref(parts[static_cast<std::size_t>(t)]));
    }
    for (auto& th : threads) th.join();
  }
  for (const auto& part : parts)
    for (const auto& [k, c] : part) table->counts[k] += c;

  std::lock_guard<std::mutex> lock(g_table_mutex);
  auto [it, inserted] = g_tables.try_emplace(key, std::move(table));
  return *it->second;
}

std::vector<SeriesMatrix> hnf_enumerate(int n, int p, int degree) {
  require_prime(p);
  if (degree < 0) throw std::invalid_argument("hnf_enumerate: negative degree");
  std::vector<SeriesMatrix> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  // compositions of degree into n parts
  auto each_composition = [&](auto&& self, int i, int left, auto&& emit) -> void {
    if (i == n - 1) {
      a[static_cast<std::size_t>(i)] = left;
      emit();
      return;
    }
    for (int k = left; k >= 0; --k) {
      a[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k, emit);
    }
  };
  each_composition(each_composition, 0, degree, [&] {
    std::vector<std::pair<int, int>> slots;  // (i, j) per digit, exponent implied
    std::vector<int> exps;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int e = 0; e < a[static_cast<std::size_t>(i)]; ++e) {
          slots.emplace_back(i, j);
          exps.push_back(e);
        }
    std::vector<int> digit(slots.size(), 0);
    while (true) {
      SeriesMatrix m = SeriesMatrix::torus(Weight(a), p);
      for (std::size_t k = 0; k < slots.size(); ++k)
        if (digit[k]) m.at(slots[k].first, slots[k].second).set(exps[k], digit[k]);
      out.push_back(std::move(m));
      std::size_t k = 0;
      for (; k < digit.size(); ++k) {
        if (++digit[k] < p) break;
        digit[k] = 0;
      }
      if (k == digit.size()) break;
    }
  });
  return out;
}

std::vector<SeriesMatrix> hnf_enumerate(int p, const Weight& mu) {
  std::vector<SeriesMatrix> out;
  for (auto& x : hnf_enumerate(static_cast<int>(mu.size()), p, mu.sum()))
    if (cartan_invariant(x) == mu) out.push_back(std::move(x));
  return out;
}

std::uint64_t convolution_oracle(const Weight& mu, const Weight& lambda, const Weight& nu, int p) {
  const SeriesMatrix t = SeriesMatrix::torus(nu, p);
  std::uint64_t count = 0;
  for (const auto& x : hnf_enumerate(p, mu))
    if (cartan_invariant(x.inverse_upper_triangular() * t) == lambda) ++count;
  return count;
}

SurdNumber satake_transform_oracle(const OrbitTable& table, const Weight& mu) {
  std::uint64_t c = 0;
  for (const auto& [k, n] : table.counts)
    if (k.first == mu) c += n;
  const auto& rs = gl(static_cast<int>(table.nu.size()));
  return q_rho(rs, table.nu, table.p) * surd_int(c, table.p) * table.representative_volume();
}

CyclotomicSum<SurdNumber> fourier_oracle(const OrbitTable& table, const Weight& lambda, PsiSign sign) {
  const auto& rs = gl(static_cast<int>(table.nu.size()));
  const HeckeElement h = satake_H(rs, lambda);
  const SurdNumber vol = table.representative_volume();
  CyclotomicSum<SurdNumber> sum(table.p, SurdNumber());
  for (const auto& [k, c] : table.counts) {
    const LaurentScalar hv = h.coeff(k.first);
    if (hv.is_zero()) continue;
    sum.add(sign == PsiSign::inverse ? -k.second : k.second, surd(hv, table.p) * surd_int(c, table.p) * vol);
  }
  return sum;
}

std::vector<Weight> pplus_weights(int n, int degree) {
  std::vector<Weight> out;
  Weight w(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int i, int left, int cap) -> void {
    if (i == n) {
      if (left == 0) out.push_back(w);
      return;
    }
    for (int k = std::min(left, cap); k >= 0; --k) {
      if (k * (n - i) < left) break;
      w[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k, k);
    }
  };
  rec(rec, 0, degree, degree);
  return out;
}

int central_twist(Weight& lambda, Weight& nu) {
  int lo = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) lo = std::min({lo, lambda[i], nu[i]});
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    lambda[i] -= lo;
    nu[i] -= lo;
  }
  return -lo;
}

namespace {

EnumerationBounds local_bounds(const Weight& nu, const LocalCheckOptions& opt) {
  EnumerationBounds b = EnumerationBounds::defaults(nu);
  b = b.widened(opt.extra_pole, 0);
  if (opt.precision >= 0) b.precision = opt.precision;
  return b;
}

bool same_value(const CyclotomicSum<SurdNumber>& a, const CyclotomicSum<SurdNumber>& b) {
  const auto x = a.canonical(), y = b.canonical();
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!(x[k] - y[k]).is_zero()) return false;
  return true;
}

nlohmann::json cyc_json(const CyclotomicSum<SurdNumber>& s) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : s.canonical()) a.push_back(to_json(c));
  return a;
}

}  // namespace

CheckReport theorem_local_pair(const Weight& lambda0, const Weight& nu0, int p, const LocalCheckOptions& opt) {
  Stopwatch sw;
  CheckReport r;
  r.claim = "local";
  Weight lambda = lambda0, nu = nu0;
  const int n = static_cast<int>(lambda.size());
  const auto& rs = gl(n);
  if (!rs.is_dominant(lambda) || !rs.is_dominant(nu)) throw std::invalid_argument("theorem_local_pair: non-dominant input");
  const int twist = central_twist(lambda, nu);
  const auto b = local_bounds(nu, opt);
  const auto& t1 = enumerate_orbits(nu, p, b, opt.jobs);
  const auto& t2 = enumerate_orbits(nu, p, b.widened(1, 1), opt.jobs);
  r.enumerated = t1.enumerated + t2.enumerated;
  const auto v1 = fourier_oracle(t1, lambda);
  const auto v2 = fourier_oracle(t2, lambda);
  const SurdNumber expected = lambda == nu ? surd(LaurentScalar::monomial(rs.two_rho_pairing(lambda)), p) : SurdNumber(p, 0);
  const std::string tag = "lambda=" + lambda0.to_string() + " nu=" + nu0.to_string() + " p=" + std::to_string(p);
  if (!v1.in_base_ring()) r.fail(tag + ": value not in Z[v]");
  else if (!(v1.base_value() - expected).is_zero()) r.fail(tag + ": got " + v1.base_value().to_string() + ", expected " + expected.to_string());
  if (!same_value(v1, v2)) r.fail(tag + ": not stabilized under widening");
  const auto flipped = fourier_oracle(t1, lambda, PsiSign::direct);
  r.lhs = cyc_json(v1);
  r.rhs = to_json(expected);
  r.details = {{"lambda", to_json(lambda0)},
               {"nu", to_json(nu0)},
               {"twist", twist},
               {"pole", b.pole},
               {"precision", b.precision},
               {"direct_sign_pass", flipped.in_base_ring() && (flipped.base_value() - expected).is_zero()}};
  r.elapsed = sw.seconds();
  return r;
}

CheckReport theorem_local_check(int n, int p, int deg_max, const LocalCheckOptions& opt) {
  Stopwatch sw;
  CheckReport r;
  r.claim = "local";
  r.details["pairs"] = 0;
  int pairs = 0;
  for (int d = 0; d <= deg_max; ++d) {
    auto ws = pplus_weights(n, d);
    if (opt.max_part >= 0)
      ws.erase(std::remove_if(ws.begin(), ws.end(), [&](const Weight& w) { return w[0] > opt.max_part; }), ws.end());
    for (const auto& nu : ws) {
      std::uint64_t sizes = 0;
      for (const auto& lambda : ws) {
        const auto sub = theorem_local_pair(lambda, nu, p, opt);
        sizes = sub.enumerated;
        r.pass = r.pass && sub.pass;
        for (const auto& f : sub.failures) r.fail(f);
        r.lhs.push_back({{"lambda", to_json(lambda)}, {"nu", to_json(nu)}, {"value", sub.lhs}});
        r.rhs.push_back({{"lambda", to_json(lambda)}, {"nu", to_json(nu)}, {"value", sub.rhs}});
        ++pairs;
      }
      r.enumerated += sizes;
    }
  }
  r.details["pairs"] = pairs;
  r.details["n"] = n;
  r.details["p"] = p;
  r.elapsed = sw.seconds();
  return r;
}

OracleH oracle_H(const Weight& lambda, int p, int jobs) {
  const int n = static_cast<int>(lambda.size());
  const auto& rs = gl(n);
  if (!rs.is_pplus(lambda)) throw std::invalid_argument("oracle_H: lambda must be in P++");
  auto ws = rs.dominant_weights_below(lambda);
  std::stable_sort(ws.begin(), ws.end(),
                   [&](const Weight& a, const Weight& b) { return rs.two_rho_pairing(a) > rs.two_rho_pairing(b); });
  OracleH out;
  for (const auto& nu : ws) {
    const auto b = EnumerationBounds::defaults(nu);
    const auto& t1 = enumerate_orbits(nu, p, b, jobs);
    const auto& t2 = enumerate_orbits(nu, p, b.widened(1, 1), jobs);
    out.enumerated += t1.enumerated + t2.enumerated;
    for (const auto& [k, c] : t1.counts)
      if (!rs.dominance_leq(nu, k.first)) out.consistent = false;
    SurdNumber rhs(p, Rational(Integer(weight_multiplicity(rs, lambda, nu))));
    for (const auto& mu : ws) {
      if (mu == nu) continue;
      const SurdNumber s = satake_transform_oracle(t1, mu);
      if (!(s - satake_transform_oracle(t2, mu)).is_zero()) out.stabilized = false;
      auto it = out.coeffs.find(mu);
      if (it == out.coeffs.end()) {
        if (!s.is_zero() && rs.dominance_leq(mu, nu)) out.consistent = false;
        continue;
      }
      rhs -= it->second * s;
    }
    const SurdNumber diag = satake_transform_oracle(t1, nu);
    if (!(diag - satake_transform_oracle(t2, nu)).is_zero()) out.stabilized = false;
    if (diag.is_zero()) {
      out.consistent = false;
      continue;
    }
    out.coeffs[nu] = rhs / diag;
  }
  return out;
}

CheckReport satake_oracle_check(int n, int p, int deg_max, int jobs) {
  Stopwatch sw;
  CheckReport r;
  r.claim = "satake-oracle";
  const auto& rs = gl(n);
  for (int d = 0; d <= deg_max; ++d)
    for (const auto& lambda : pplus_weights(n, d)) {
      const OracleH o = oracle_H(lambda, p, jobs);
      r.enumerated += o.enumerated;
      const HeckeElement h = satake_H(rs, lambda);
      const std::string tag = "lambda=" + lambda.to_string() + " p=" + std::to_string(p);
      if (!o.consistent) r.fail(tag + ": inconsistent triangular system");
      if (!o.stabilized) r.fail(tag + ": transform not stabilized");
      std::set<Weight> support;
      for (const auto& [mu, c] : o.coeffs)
        if (!c.is_zero()) support.insert(mu);
      for (const auto& [mu, c] : h.coeffs()) support.insert(mu);
      nlohmann::json lhs = nlohmann::json::array(), rhs = nlohmann::json::array();
      for (const auto& mu : support) {
        const auto it = o.coeffs.find(mu);
        const SurdNumber a = it == o.coeffs.end() ? SurdNumber(p, 0) : it->second;
        const SurdNumber b = surd(h.coeff(mu), p);
        if (!(a - b).is_zero()) r.fail(tag + " mu=" + mu.to_string() + ": oracle " + a.to_string() + " vs " + b.to_string());
        lhs.push_back({{"mu", to_json(mu)}, {"value", to_json(a)}});
        rhs.push_back({{"mu", to_json(mu)}, {"value", to_json(b)}});
      }
      r.lhs.push_back({{"lambda", to_json(lambda)}, {"coeffs", lhs}});
      r.rhs.push_back({{"lambda", to_json(lambda)}, {"coeffs", rhs}});
    }
  r.details = {{"n", n}, {"p", p}, {"deg_max", deg_max}};
  r.elapsed = sw.seconds();
  return r;
}

namespace {

bool same_character(const CyclotomicSum<SurdCharacter>& s, const SurdCharacter& expected) {
  return s.in_base_ring() && (s.base_value() - expected).is_zero();
}

}  // namespace

CheckReport fplus_check(const Weight& nu, int p, int jobs) {
  Stopwatch sw;
  CheckReport r;
  r.claim = "fplus";
  const int n = static_cast<int>(nu.size());
  const auto& rs = gl(n);
  if (!rs.is_pplus(nu)) throw std::invalid_argument("fplus_check: nu must be in P++");
  const SurdCharacter expected = evaluate_at_q(LaurentScalar::q_power(n_lambda(nu)) * weyl_character(rs, nu), p);
  auto run = [&](const OrbitTable& t) {
    CyclotomicSum<SurdCharacter> sum(p, SurdCharacter());
    const SurdNumber vol = t.representative_volume();
    std::map<Weight, SurdCharacter> cache;
    for (const auto& [k, c] : t.counts) {
      if (!rs.is_pplus(k.first)) continue;
      auto it = cache.find(k.first);
      if (it == cache.end()) it = cache.emplace(k.first, evaluate_at_q(laumon_local_value(rs, k.first), p)).first;
      sum.add(-k.second, it->second.scaled(surd_int(c, p) * vol));
    }
    return sum;
  };
  const auto b = EnumerationBounds::defaults(nu);
  const auto& t1 = enumerate_orbits(nu, p, b, jobs);
  const auto& t2 = enumerate_orbits(nu, p, b.widened(1, 1), jobs);
  r.enumerated = t1.enumerated + t2.enumerated;
  const auto s1 = run(t1);
  const auto s2 = run(t2);
  const std::string tag = "nu=" + nu.to_string() + " p=" + std::to_string(p);
  if (!same_character(s1, expected))
    r.fail(tag + ": got " + (s1.in_base_ring() ? s1.base_value().to_string() : std::string("zeta-dependent value")) +
           ", expected " + expected.to_string());
  if (!same_character(s2, expected)) r.fail(tag + ": widened box disagrees");
  r.lhs = s1.in_base_ring() ? to_json(s1.base_value()) : nlohmann::json("zeta-dependent");
  r.rhs = to_json(expected);
  r.details = {{"nu", to_json(nu)}, {"p", p}, {"direct_sign_pass", same_character(s1.conjugate(), expected)}};
  r.elapsed = sw.seconds();
  return r;
}

CyclotomicSum<SurdCharacter> whittaker_at(const SeriesMatrix& g, PsiSign sign) {
  const auto& rs = gl(g.size());
  const IwasawaData iw = iwasawa(g);
  CyclotomicSum<SurdCharacter> out(g.prime(), SurdCharacter());
  out.add(sign == PsiSign::inverse ? -iw.psi_exponent : iw.psi_exponent,
          evaluate_at_q(whittaker_value(rs, iw.mu, Normalization::unitary), g.prime()));
  return out;
}

CheckReport cs_eigen_check(const Weight& mu, const Weight& nu, int p) {
  Stopwatch sw;
  CheckReport r;
  r.claim = "cs-eigen";
  const int n = static_cast<int>(mu.size());
  const auto& rs = gl(n);
  if (!rs.is_pplus(mu)) throw std::invalid_argument("cs_eigen_check: mu must be in P++");
  const SeriesMatrix t = SeriesMatrix::torus(nu, p);
  CyclotomicSum<SurdCharacter> lhs(p, SurdCharacter());
  const auto xs = hnf_enumerate(p, mu);
  for (const auto& x : xs) lhs += whittaker_at(t * x);
  r.enumerated = xs.size();
  const SurdCharacter rhs =
      evaluate_at_q(chi_eval(HeckeElement::c_basis(rs, mu)) * whittaker_value(rs, nu, Normalization::unitary), p);
  const std::string tag = "mu=" + mu.to_string() + " nu=" + nu.to_string() + " p=" + std::to_string(p);
  if (!same_character(lhs, rhs))
    r.fail(tag + ": got " + (lhs.in_base_ring() ? lhs.base_value().to_string() : std::string("zeta-dependent value")) +
           ", expected " + rhs.to_string());
  r.lhs = lhs.in_base_ring() ? to_json(lhs.base_value()) : nlohmann::json("zeta-dependent");
  r.rhs = to_json(rhs);
  r.details = {{"mu", to_json(mu)}, {"nu", to_json(nu)}, {"p", p}};
  r.elapsed = sw.seconds();
  return r;
}

CheckReport hecke_operator_dictionary(int n) {
  Stopwatch sw;
  CheckReport r;
  r.claim = "hecke-operators";
  const auto& rs = gl(n);
  for (int i = 1; i <= n; ++i) {
    Weight mu(static_cast<std::size_t>(n));
    for (int k = 0; k < i; ++k) mu[static_cast<std::size_t>(k)] = 1;
    const VirtualCharacter& ei = weyl_character(rs, mu);
    const LaurentCharacter chi = chi_eval(HeckeElement::c_basis(rs, mu));
    const LaurentCharacter unit = LaurentScalar::monomial(-i * (n - i)) * ei;
    const LaurentCharacter gal = LaurentScalar::monomial(i * (i - 1)) * ei;
    if (!(chi == unit)) r.fail("i=" + std::to_string(i) + ": unitary eigenvalue " + chi.to_string());
    if (!(unitary_to_galois(rs, chi) == gal)) r.fail("i=" + std::to_string(i) + ": galois eigenvalue mismatch");
    r.lhs.push_back(to_json(chi));
    r.rhs.push_back(to_json(unit));
  }
  r.elapsed = sw.seconds();
  return r;
}

CheckReport measure_check(const OrbitTable& t) {
  CheckReport r;
  r.claim = "measure";
  std::uint64_t total = 0;
  for (const auto& [k, c] : t.counts) total += c;
  r.enumerated = total;
  const SurdNumber vol = surd_int(total, t.p) * t.representative_volume();
  const SurdNumber expected(t.p, Rational(ipow(Integer(t.p), static_cast<unsigned>(t.bounds.pole_volume()))));
  if (!(vol - expected).is_zero()) r.fail("total volume " + vol.to_string() + " vs " + expected.to_string());
  if (total != t.enumerated) r.fail("counts do not add up to the box size");
  std::uint64_t box = 1;
  for (int k = 0; k < t.bounds.digits(); ++k) box *= static_cast<std::uint64_t>(t.p);
  if (box != total) r.fail("box size differs from p^digits");
  r.lhs = to_json(vol);
  r.rhs = to_json(expected);
  return r;
}

}  // namespace sphecke
