#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sphecke/charring.hpp"
#include "sphecke/checks.hpp"
#include "sphecke/laumon.hpp"
#include "sphecke/padic.hpp"

using namespace sphecke;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string rs;
  int n = 2;
  int p = 2;
  std::string lambda, nu, mu;
  int deg_max = 3;
  int max_part = -1;
  int pole_bound = 0;
  int precision = -1;
  int jobs = 1;
  int J = 8;
  int max_height = 4;
  int q = 4;
  std::string gamma = "3/2,2/3";
  int shells = 50;
  double tolerance = 1e-9;
  bool numeric = false;
  bool json_out = false;
  bool csv_out = false;

  json echo() const {
    return json{{"command", command},   {"rs", rs},         {"n", n},
                {"p", p},              {"lambda", lambda}, {"nu", nu},
                {"mu", mu},            {"deg_max", deg_max}, {"max_part", max_part},
                {"pole_bound", pole_bound}, {"precision", precision}, {"J", J},
                {"max_height", max_height}, {"q", q},       {"gamma", gamma},
                {"shells", shells},    {"tolerance", tolerance}, {"numeric", numeric}};
  }
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::filesystem::path cache_path(const RunConfig& cfg) {
  const char* dir = std::getenv("SPHECKE_CACHE_DIR");
  if (!dir || !*dir) return {};
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a(cfg.echo().dump())));
  return std::filesystem::path(dir) / name;
}

Weight weight_arg(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string("missing --") + flag);
  try {
    return parse_weight(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --") + flag + ": " + e.what());
  }
}

const RootSystem& rs_arg(const RunConfig& cfg) {
  const std::string label = cfg.rs.empty() ? "GL" + std::to_string(cfg.n) : cfg.rs;
  try {
    return root_system(label);
  } catch (const std::exception& e) {
    throw UsageError("unknown root system " + label);
  }
}

int gl_rank(const RunConfig& cfg) {
  if (cfg.rs.empty()) return cfg.n;
  const auto& rs = rs_arg(cfg);
  if (!rs.is_gl()) throw UsageError("this command needs a GL(n) root system");
  return static_cast<int>(rs.dim());
}

void check_weight(const RootSystem& rs, const Weight& w, const char* flag) {
  if (w.size() != rs.dim()) throw UsageError(std::string("--") + flag + " has the wrong number of coordinates");
  if (!rs.is_dominant(w)) throw UsageError(std::string("--") + flag + " must be dominant");
}

std::vector<Rational> rationals_arg(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      const auto slash = item.find('/');
      if (slash == std::string::npos) out.emplace_back(Integer(std::stoll(item)));
      else out.emplace_back(Rational(Integer(std::stoll(item.substr(0, slash))), Integer(std::stoll(item.substr(slash + 1)))));
    } catch (const std::exception&) {
      throw UsageError("bad rational '" + item + "'");
    }
  }
  return out;
}

// ---- table commands ----

int run_lk(const RunConfig& cfg) {
  const auto& rs = rs_arg(cfg);
  const Weight lambda = weight_arg(cfg.lambda, "lambda");
  check_weight(rs, lambda, "lambda");
  std::vector<Weight> mus;
  if (!cfg.mu.empty()) {
    const Weight mu = weight_arg(cfg.mu, "mu");
    check_weight(rs, mu, "mu");
    if (!rs.dominance_leq(mu, lambda)) throw UsageError("--mu must satisfy mu <= lambda");
    mus.push_back(mu);
  } else {
    mus = rs.dominant_weights_below(lambda);
  }
  if (cfg.csv_out) std::cout << "mu,P\n";
  for (const auto& mu : mus) {
    const QPolynomial p = lusztig_kato(rs, lambda, mu);
    if (cfg.json_out) {
      std::cout << json{{"mu", to_json(mu)}, {"P", to_json(p)}}.dump() << "\n";
    } else if (cfg.csv_out) {
      std::cout << '"' << mu.to_string() << "\",";
      for (std::size_t k = 0; k < p.coeffs().size(); ++k) std::cout << (k ? " " : "") << p.coeffs()[k];
      std::cout << "\n";
    } else {
      std::cout << "P_{" << mu << "," << lambda << "} = " << p.to_string("q") << "\n";
    }
  }
  return kPass;
}

int run_satake(const RunConfig& cfg) {
  const auto& rs = rs_arg(cfg);
  const Weight lambda = weight_arg(cfg.lambda, "lambda");
  check_weight(rs, lambda, "lambda");
  const HeckeElement h = satake_H(rs, lambda);
  if (cfg.json_out) {
    std::cout << to_json(h).dump() << "\n";
  } else if (cfg.csv_out) {
    std::cout << "mu,v_exponent,coeff\n";
    for (const auto& [mu, c] : h.coeffs())
      for (const auto& [e, k] : c.terms()) std::cout << '"' << mu.to_string() << "\"," << e << "," << k << "\n";
  } else {
    std::cout << "H_" << lambda << " =\n";
    for (const auto& [mu, c] : h.coeffs()) std::cout << "  c_" << mu << " : " << c.to_string() << "\n";
  }
  return kPass;
}

int run_stalks(const RunConfig& cfg) {
  const auto& rs = rs_arg(cfg);
  if (!rs.is_gl()) throw UsageError("stalks needs a GL(n) root system");
  const Weight lambda = weight_arg(cfg.lambda, "lambda");
  check_weight(rs, lambda, "lambda");
  if (!rs.is_pplus(lambda)) throw UsageError("--lambda must lie in P++");
  const StalkTable t = stalk_table(rs, lambda);
  if (cfg.json_out) {
    json rows = json::array();
    for (const auto& row : t.rows) {
      json e = json::array();
      for (const auto& [deg, dim] : row.entries) e.push_back(json::array({deg, to_json(dim)}));
      rows.push_back({{"mu", to_json(row.mu)}, {"entries", e}});
    }
    std::cout << json{{"lambda", to_json(lambda)}, {"rows", rows}}.dump() << "\n";
  } else if (cfg.csv_out) {
    std::cout << "mu,degree,dimension\n";
    for (const auto& row : t.rows)
      for (const auto& [deg, dim] : row.entries) std::cout << '"' << row.mu.to_string() << "\"," << deg << "," << dim << "\n";
  } else {
    for (const auto& row : t.rows) {
      std::cout << "mu=" << row.mu << ":";
      for (const auto& [deg, dim] : row.entries) std::cout << " H^" << deg << "=" << dim;
      std::cout << "\n";
    }
  }
  return kPass;
}

int run_lgamma_series(const RunConfig& cfg) {
  const auto& rs = rs_arg(cfg);
  const Weight mu = cfg.mu.empty() ? rs.zero() : weight_arg(cfg.mu, "mu");
  check_weight(rs, mu, "mu");
  const LGammaSeries s = L_gamma_series(rs, mu, cfg.J);
  if (cfg.json_out) {
    json a = json::array();
    for (int k = 0; k <= cfg.J; ++k) a.push_back(to_json(s.series[k]));
    std::cout << json{{"mu", to_json(mu)}, {"J", cfg.J}, {"shells", s.shells}, {"series", a}}.dump() << "\n";
  } else {
    for (int k = 0; k <= cfg.J; ++k) std::cout << "u^" << k << ": " << s.series[k].to_string() << "\n";
  }
  return kPass;
}

// ---- verification commands ----

CheckReport merge(const std::string& claim, const std::vector<CheckReport>& parts) {
  CheckReport r;
  r.claim = claim;
  for (const auto& p : parts) {
    r.absorb(p);
    r.elapsed += p.elapsed;
    r.lhs.push_back(p.lhs);
    r.rhs.push_back(p.rhs);
  }
  return r;
}

LocalCheckOptions local_options(const RunConfig& cfg) {
  LocalCheckOptions o;
  o.extra_pole = cfg.pole_bound;
  o.precision = cfg.precision;
  o.max_part = cfg.max_part;
  o.jobs = cfg.jobs;
  return o;
}

CheckReport verify(const RunConfig& cfg) {
  const std::string& c = cfg.command;
  if (c == "local-check") {
    const int n = gl_rank(cfg);
    if (!cfg.lambda.empty() || !cfg.nu.empty())
      return theorem_local_pair(weight_arg(cfg.lambda, "lambda"), weight_arg(cfg.nu, "nu"), cfg.p, local_options(cfg));
    return theorem_local_check(n, cfg.p, cfg.deg_max, local_options(cfg));
  }
  if (c == "fplus-check") {
    const int n = gl_rank(cfg);
    if (!cfg.nu.empty()) return fplus_check(weight_arg(cfg.nu, "nu"), cfg.p, cfg.jobs);
    std::vector<CheckReport> parts;
    for (int d = 0; d <= cfg.deg_max; ++d)
      for (const auto& nu : pplus_weights(n, d))
        if (cfg.max_part < 0 || nu[0] <= cfg.max_part) parts.push_back(fplus_check(nu, cfg.p, cfg.jobs));
    return merge("fplus", parts);
  }
  if (c == "cs-check") {
    const int n = gl_rank(cfg);
    if (!cfg.mu.empty() && !cfg.nu.empty()) return cs_eigen_check(weight_arg(cfg.mu, "mu"), weight_arg(cfg.nu, "nu"), cfg.p);
    // mu = (1^i, 0^{n-i}), nu with consecutive gaps in [-2, 2] and nu_n = 0
    std::vector<CheckReport> parts;
    std::vector<Weight> nus;
    Weight w(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int i) -> void {
      if (i < 0) {
        nus.push_back(w);
        return;
      }
      for (int g = -2; g <= 2; ++g) {
        w[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i + 1)] + g;
        self(self, i - 1);
      }
    };
    w[static_cast<std::size_t>(n - 1)] = 0;
    rec(rec, n - 2);
    for (int i = 1; i <= n; ++i) {
      Weight mu(static_cast<std::size_t>(n));
      for (int k = 0; k < i; ++k) mu[static_cast<std::size_t>(k)] = 1;
      for (const auto& nu : nus) parts.push_back(cs_eigen_check(mu, nu, cfg.p));
    }
    parts.push_back(hecke_operator_dictionary(n));
    return merge("cs-eigen", parts);
  }
  if (c == "satake-oracle-check") {
    const int n = gl_rank(cfg);
    if (!cfg.lambda.empty()) {
      const Weight lambda = weight_arg(cfg.lambda, "lambda");
      const OracleH o = oracle_H(lambda, cfg.p, cfg.jobs);
      CheckReport r;
      r.claim = "satake-oracle";
      const HeckeElement h = satake_H(root_system("GL" + std::to_string(n)), lambda);
      for (const auto& [mu, a] : o.coeffs) {
        const SurdNumber b = SurdNumber::evaluate(h.coeff(mu), cfg.p);
        if (!(a - b).is_zero()) r.fail("mu=" + mu.to_string() + ": oracle " + a.to_string() + " vs " + b.to_string());
        r.lhs.push_back({{"mu", to_json(mu)}, {"value", to_json(a)}});
        r.rhs.push_back({{"mu", to_json(mu)}, {"value", to_json(b)}});
      }
      if (!o.consistent) r.fail("inconsistent triangular system");
      if (!o.stabilized) r.fail("not stabilized");
      r.enumerated = o.enumerated;
      return r;
    }
    return satake_oracle_check(n, cfg.p, cfg.deg_max, cfg.jobs);
  }
  if (c == "kostant-check") {
    const auto& rs = rs_arg(cfg);
    std::vector<CheckReport> parts{kostant_check(rs, cfg.max_height, cfg.J)};
    if (!rs.is_gl()) parts.push_back(adjoint_check(rs));
    return merge("kostant", parts);
  }
  if (c == "id1-check") {
    const auto& rs = rs_arg(cfg);
    const Weight mu = cfg.mu.empty() ? rs.zero() : weight_arg(cfg.mu, "mu");
    check_weight(rs, mu, "mu");
    return id1_check(rs, mu, cfg.J);
  }
  if (c == "plancherel-check") return plancherel_report(rs_arg(cfg), cfg.J, cfg.max_height);
  if (c == "lgamma") {
    const auto& rs = rs_arg(cfg);
    const auto gamma = rationals_arg(cfg.gamma);
    if (gamma.size() != rs.dim()) throw UsageError("--gamma has the wrong number of coordinates");
    return lgamma_numeric_check(rs, gamma, cfg.q, cfg.shells, cfg.tolerance);
  }
  throw UsageError("unknown command " + c);
}

void print_report(const CheckReport& r, const RunConfig& cfg, bool cached) {
  if (cfg.json_out) {
    json j = r.to_json();
    j["config"] = cfg.echo();
    j["cached"] = cached;
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << (r.pass ? "PASS " : "FAIL ") << r.claim << "  enumerated=" << r.enumerated << "  elapsed=" << r.elapsed
            << "s" << (cached ? "  (cached)" : "") << "\n";
  for (const auto& f : r.failures) std::cout << "  counterexample: " << f << "\n";
}

int run_verification(const RunConfig& cfg) {
  const auto path = cache_path(cfg);
  if (!path.empty() && std::filesystem::exists(path)) {
    std::ifstream in(path);
    json j = json::parse(in, nullptr, false);
    if (!j.is_discarded() && j.contains("pass")) {
      CheckReport r;
      r.claim = j.value("claim", cfg.command);
      r.pass = j["pass"].get<bool>();
      r.lhs = j["lhs"];
      r.rhs = j["rhs"];
      r.enumerated = j.value("enumerated", std::uint64_t{0});
      r.elapsed = j.value("elapsed", 0.0);
      r.failures = j.value("failures", std::vector<std::string>{});
      r.details = j.value("details", json::object());
      print_report(r, cfg, true);
      return r.pass ? kPass : kFail;
    }
  }
  Stopwatch sw;
  CheckReport r = verify(cfg);
  r.elapsed = sw.seconds();
  if (!path.empty()) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream(path) << r.to_json().dump() << "\n";
  }
  print_report(r, cfg, false);
  return r.pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spherical Hecke algebra computations and identity checks"};
  app.require_subcommand(1, 1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--rs", cfg.rs, "root system: GL1..GL4, A1, A2, A3, B2, C2, G2");
    sub->add_option("--n", cfg.n, "GL(n) rank for the p-adic oracle")->check(CLI::Range(1, 4));
    sub->add_option("--p", cfg.p, "residue field size (prime)")->check(CLI::Range(2, 97));
    sub->add_option("--lambda", cfg.lambda, "weight, comma separated");
    sub->add_option("--nu", cfg.nu, "weight, comma separated");
    sub->add_option("--mu", cfg.mu, "weight, comma separated");
    sub->add_option("--deg-max", cfg.deg_max, "largest |lambda| in a suite");
    sub->add_option("--max-part", cfg.max_part, "bound on lambda_1 in a suite");
    sub->add_option("--pole-bound", cfg.pole_bound, "extra pole order on top of D_j = nu_j")->check(CLI::NonNegativeNumber);
    sub->add_option("--precision", cfg.precision, "invariance precision m (default nu_1 - nu_n + 1)");
    sub->add_option("--jobs", cfg.jobs, "worker threads for enumeration")->check(CLI::Range(1, 256));
    sub->add_option("--J,--truncation", cfg.J, "u-degree truncation")->check(CLI::NonNegativeNumber);
    sub->add_option("--max-height", cfg.max_height, "height bound for weight ranges")->check(CLI::NonNegativeNumber);
    sub->add_option("--q", cfg.q, "numeric q")->check(CLI::Range(2, 1 << 20));
    sub->add_option("--gamma", cfg.gamma, "numeric torus element, e.g. 3/2,2/3");
    sub->add_option("--shells", cfg.shells, "number of height shells")->check(CLI::PositiveNumber);
    sub->add_option("--tolerance", cfg.tolerance, "relative error bound for numeric checks");
    sub->add_flag("--json", cfg.json_out, "JSON output");
    sub->add_flag("--csv", cfg.csv_out, "CSV output");
  };
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"lk", "P_{mu lambda} table"},
      {"satake", "H_lambda in the c-basis"},
      {"local-check", "Fourier transform of H_lambda against delta_{lambda nu} by enumeration"},
      {"fplus-check", "Fourier transform of L_{E,x} by enumeration"},
      {"cs-check", "Whittaker eigenproperty and Hecke operator eigenvalues"},
      {"satake-oracle-check", "H_lambda recovered from the enumerated Satake transform"},
      {"kostant-check", "P_{0 lambda} against generalized exponents"},
      {"id1-check", "L_gamma series identity"},
      {"plancherel-check", "Plancherel measure identities"},
      {"lgamma", "L_gamma series, or numeric convergence with --numeric"},
      {"stalks", "IC stalk table of A_lambda"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    if (name == "lgamma") sub->add_flag("--numeric", cfg.numeric, "numeric partial sums");
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (cfg.json_out && cfg.csv_out) {
    std::cerr << "--json and --csv are exclusive\n";
    return kUsage;
  }

  try {
    if (cfg.command == "lk") return run_lk(cfg);
    if (cfg.command == "satake") return run_satake(cfg);
    if (cfg.command == "stalks") return run_stalks(cfg);
    if (cfg.command == "lgamma" && !cfg.numeric) return run_lgamma_series(cfg);
    return run_verification(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
