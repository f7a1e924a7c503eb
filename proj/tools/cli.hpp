#pragma once

// Command-line front end: parse() turns argv into a CommandPlan, run()
// executes it against an output stream and returns the exit code.
// Exit codes: 0 ok, 1 error, 2 hypothesis violation under --strict.

#include "satotate/satotate.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace satotate::cli {

enum class Format { human, json, csv };

struct CommandPlan {
  std::string subcommand;
  std::string action;  // serre: classes | scan
  Format format = Format::human;
  bool strict = false;
  unsigned threads = 1;

  std::uint64_t limit = 0;
  std::optional<std::uint64_t> index;
  std::uint64_t p = 0;
  double eps = kDefaultAngleEps;

  std::string interval = "0,3.141592653589793";
  unsigned M = 8;
  std::optional<double> M_real;
  std::string side = "majorant";

  double tol = kDefaultQuadTol;

  double x = 1e6;
  std::uint64_t q = 1;
  std::uint64_t N = 1;
  int k = 12;
  int n = 0;
  bool n_given = false;
  double T = 0;
  std::string mode = "theorem";
  std::string pp_mode = "proof";

  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  std::uint64_t a = 1;
  std::string dump;
  std::string cache_dir;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
  int code = 1;
};

inline Interval parse_interval(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("interval must be a,b");
  try {
    return Interval(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad interval: ") + e.what());
  }
}

inline CommandPlan parse(const std::vector<std::string>& args) {
  CommandPlan plan;
  CLI::App app{"Sato-Tate toolkit for the Ramanujan tau function", "satotate"};
  app.require_subcommand(1);
  app.add_flag("--strict", plan.strict, "exit 2 when a hypothesis check fails");
  app.add_option("--threads", plan.threads, "worker cap")->check(CLI::Range(1u, 256u));
  bool json = false, csv = false;

  auto* tau = app.add_subcommand("tau", "Ramanujan tau table");
  tau->add_option("--limit", plan.limit, "table size X")->required()->check(CLI::Range(std::uint64_t{1}, kMaxTableLimit));
  tau->add_option("--n", plan.index, "print only tau(n)");
  tau->add_option("--cache-dir", plan.cache_dir, "table cache directory");
  tau->add_flag("--json", json);

  auto* ang = app.add_subcommand("angle", "Sato-Tate angle of a prime");
  ang->add_option("--p", plan.p, "prime")->required();
  ang->add_option("--eps", plan.eps, "absolute precision");
  ang->add_option("--cache-dir", plan.cache_dir, "table cache directory");

  auto* ext = app.add_subcommand("extremal", "majorant/minorant polynomial");
  ext->add_option("--interval", plan.interval, "a,b in radians");
  ext->add_option("--M", plan.M, "degree")->check(CLI::PositiveNumber);
  ext->add_option("--side", plan.side)->check(CLI::IsMember({"majorant", "minorant"}));
  ext->add_flag("--csv", csv);

  auto* cst = app.add_subcommand("constants", "test-function constants as JSON");
  cst->add_option("--tol", plan.tol, "quadrature tolerance")->check(CLI::PositiveNumber);

  auto* bnd = app.add_subcommand("bound", "evaluate an explicit bound");
  bnd->add_option("--x", plan.x)->check(CLI::PositiveNumber);
  bnd->add_option("--q", plan.q)->check(CLI::PositiveNumber);
  bnd->add_option("--N", plan.N)->check(CLI::PositiveNumber);
  bnd->add_option("--k", plan.k);
  auto* nopt = bnd->add_option("--n", plan.n)->check(CLI::NonNegativeNumber);
  bnd->add_option("--T", plan.T);
  bnd->add_option("--M", plan.M_real, "degree for assemble (default: theorem choice)");
  bnd->add_option("--mode", plan.mode)
      ->check(CLI::IsMember({"theorem", "prop33", "lehmer", "zerocount", "assemble", "primepower", "corollary"}));
  bnd->add_option("--pp-mode", plan.pp_mode)->check(CLI::IsMember({"proof", "statement"}));
  bnd->add_flag("--json", json);

  auto* ser = app.add_subcommand("serre", "congruence classes for tau(p) = 0");
  ser->require_subcommand(1);
  auto* cls = ser->add_subcommand("classes", "print the 33 classes");
  auto* scan = ser->add_subcommand("scan", "candidate primes in [lo, hi] as CSV");
  scan->add_option("--lo", plan.lo)->required();
  scan->add_option("--hi", plan.hi)->required();

  auto* ver = app.add_subcommand("verify", "progression sum against the main bound");
  ver->add_option("--x", plan.x)->check(CLI::Range(1.0, 6.0e6));
  ver->add_option("--q", plan.q)->check(CLI::Range(std::uint64_t{1}, kCharacterModulusBudget));
  ver->add_option("--a", plan.a);
  ver->add_option("--interval", plan.interval);
  auto* vn = ver->add_option("--n", plan.n, "also report harmonic sums of degree n per character")
                 ->check(CLI::NonNegativeNumber);
  ver->add_option("--dump", plan.dump, "CSV of p,theta,weight");
  ver->add_option("--cache-dir", plan.cache_dir, "table cache directory");
  ver->add_flag("--json", json);

  auto* cen = app.add_subcommand("census", "Sato-Tate census up to x");
  cen->add_option("--x", plan.x)->check(CLI::Range(2.0, static_cast<double>(kMaxTableLimit)));
  cen->add_option("--interval", plan.interval);
  cen->add_option("--cache-dir", plan.cache_dir, "table cache directory");
  cen->add_flag("--json", json);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    UsageError e(app.help());
    e.code = 0;
    throw e;
  } catch (const CLI::ParseError& e) {
    throw UsageError(std::string(e.get_name()) + ": " + e.what());
  }

  for (auto* sc : app.get_subcommands()) plan.subcommand = sc->get_name();
  if (plan.subcommand == "serre") plan.action = cls->parsed() ? "classes" : "scan";
  plan.n_given = (nopt->count() + vn->count()) > 0;
  if (json) plan.format = Format::json;
  if (csv) plan.format = Format::csv;
  if (plan.subcommand == "constants" || plan.subcommand == "verify") plan.format = Format::json;
  if (plan.subcommand == "serre" && plan.action == "scan") plan.format = Format::csv;
  if (plan.subcommand == "extremal" || plan.subcommand == "verify" || plan.subcommand == "census" ||
      plan.subcommand == "angle") {
    parse_interval(plan.interval);
  }
  if (plan.cache_dir.empty()) {
    if (const char* env = std::getenv("SATOTATE_CACHE_DIR")) plan.cache_dir = env;
  }
  return plan;
}

inline CommandPlan parse(int argc, const char* const* argv) {
  return parse(std::vector<std::string>(argv + 1, argv + argc));
}

namespace detail {

inline std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline CoefficientTable load_table(const CommandPlan& plan, std::uint64_t limit) {
  TableOptions opts;
  opts.threads = plan.threads;
  if (!plan.cache_dir.empty()) return cached_delta_coefficients(limit, plan.cache_dir, opts);
  return delta_coefficients(limit, opts);
}

inline void print_human(std::ostream& out, const BoundReport& r) {
  out << "# constants " << r.constants_checksum << "\n";
  out << r.kind << " = " << num(r.value) << "\n";
  for (const auto& t : r.terms) out << "  " << t.name << " = " << num(t.value) << "\n";
  for (const auto& [k, v] : r.extras) out << "  [" << k << "] " << num(v) << "\n";
  for (const auto& c : r.validity) {
    out << "  check " << c.name << ": " << (c.ok ? "ok" : "FAILED");
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
}

inline int finish(const CommandPlan& plan, bool hypotheses_ok, std::ostream& err) {
  if (!hypotheses_ok && plan.strict) {
    err << "satotate: hypothesis check failed (--strict)\n";
    return 2;
  }
  return 0;
}

inline int run_tau(const CommandPlan& plan, std::ostream& out) {
  const auto table = load_table(plan, plan.limit);
  if (plan.index) {
    const auto v = table.at(*plan.index);
    if (plan.format == Format::json) {
      out << nlohmann::ordered_json{{"n", *plan.index}, {"tau", v.str()},
                                    {"constants_checksum", constants::checksum()}}.dump() << "\n";
    } else {
      out << v.str() << "\n";
    }
    return 0;
  }
  if (plan.format == Format::json) {
    nlohmann::ordered_json j;
    j["limit"] = plan.limit;
    auto& vals = j["tau"] = nlohmann::ordered_json::array();
    for (std::uint64_t n = 1; n <= plan.limit; ++n) vals.push_back(table[n].str());
    j["constants_checksum"] = constants::checksum();
    out << j.dump() << "\n";
  } else {
    out << "n,tau\n";
    for (std::uint64_t n = 1; n <= plan.limit; ++n) out << n << "," << table[n].str() << "\n";
  }
  return 0;
}

inline int run_angle(const CommandPlan& plan, std::ostream& out) {
  if (!arith::is_prime(plan.p)) throw std::invalid_argument("angle: p must be prime");
  const auto table = load_table(plan, plan.p);
  const auto rec = angle(plan.p, table, plan.eps);
  nlohmann::ordered_json j{{"p", rec.p},
                           {"tau", table[plan.p].str()},
                           {"theta", rec.theta},
                           {"precision", rec.precision},
                           {"eps", plan.eps},
                           {"constants_checksum", constants::checksum()}};
  out << j.dump(2) << "\n";
  return 0;
}

inline int run_extremal(const CommandPlan& plan, std::ostream& out) {
  const auto I = parse_interval(plan.interval);
  const auto e = build_extremal(I, plan.M, plan.side == "majorant" ? Side::majorant : Side::minorant);
  if (plan.format == Format::csv) {
    write_csv(out, e);
    return 0;
  }
  auto j = to_json(e);
  j["mu_st"] = mu_st(I);
  if (plan.M >= 8) {
    const auto s = coefficient_sums(e);
    j["sums"] = {{"S0", s.s0}, {"S1", s.s1}, {"S2", s.s2},
                 {"ceiling0", s.ceiling0}, {"ceiling1", s.ceiling1}, {"ceiling2", s.ceiling2},
                 {"certified", s.certified()}};
  }
  j["constants_checksum"] = constants::checksum();
  out << j.dump(2) << "\n";
  return 0;
}

inline int run_constants(const CommandPlan& plan, std::ostream& out, std::ostream& err) {
  const auto c = PhiConstants::compute(plan.tol);
  nlohmann::ordered_json j;
  j["schema"] = "constants";
  j["schema_version"] = kJsonSchemaVersion;
  j["phi"] = to_json(c);
  j["c_n_error"] = {{"C0", c_n_detailed(0, plan.tol).error},
                    {"C1", c_n_detailed(1, plan.tol).error},
                    {"C2", c_n_detailed(2, plan.tol).error}};
  j["Phi1_le_1.323"] = c.Phi1 <= constants::kPhiOneCeiling;
  j["Phi1_ge_1"] = c.Phi1 >= 1.0;
  j["pi_over_4_Phi1"] = std::numbers::pi / 4.0 * c.Phi1;
  j["abs_Phi0_le_8"] = std::fabs(c.Phi0) <= constants::kPhiZeroCeiling;
  j["C0_minus_PhiHalf"] = c.C0 - c.PhiHalf;
  auto& tbl = j["table"] = nlohmann::ordered_json::array();
  for (const auto& e : constants::kTable) {
    tbl.push_back({{"name", std::string(e.name)}, {"value", e.value}, {"cite", std::string(e.cite)}});
  }
  j["constants_checksum"] = constants::checksum();
  out << j.dump(2) << "\n";
  const bool ok = c.Phi1 <= constants::kPhiOneCeiling && std::fabs(c.Phi0) <= constants::kPhiZeroCeiling;
  return finish(plan, ok, err);
}

inline int run_bound(const CommandPlan& plan, std::ostream& out, std::ostream& err) {
  const auto& c = PhiConstants::standard();
  if (plan.mode == "zerocount") {
    const double v = zero_count_bound(plan.n, plan.T, plan.N, plan.q, plan.k);
    BoundReport r;
    r.kind = "zero_count";
    r.consts = c;
    r.input("n", plan.n);
    r.input("T", plan.T);
    r.input("N", static_cast<double>(plan.N));
    r.input("q", static_cast<double>(plan.q));
    r.input("k", plan.k);
    r.add("n(T)", v);
    r.extra("gamma_logderiv", gamma_logderiv_bound(plan.n, plan.T, plan.k));
    r.extra("zeta_logderiv_term", zeta_logderiv_term(plan.n));
    r.finalize();
    if (plan.format == Format::json) out << to_json(r).dump(2) << "\n"; else print_human(out, r);
    return 0;
  }
  if (plan.mode == "corollary") {
    out << to_json(corollary_reproduction(c)).dump(2) << "\n";
    return 0;
  }
  BoundReport r;
  if (plan.mode == "theorem") {
    r = theorem_bound(plan.x, plan.q, plan.N, plan.k, c);
  } else if (plan.mode == "prop33") {
    r = prop33_bound(plan.n, plan.x, plan.N, plan.q, plan.k, c);
  } else if (plan.mode == "primepower") {
    r = prime_power_error_bound(plan.n, plan.x, plan.N,
                                plan.pp_mode == "proof" ? PrimePowerMode::proof : PrimePowerMode::statement);
  } else if (plan.mode == "lehmer") {
    r = lehmer_bound(plan.x);
  } else {
    const double M = plan.M_real ? *plan.M_real : m_choice(plan.x, plan.q, MMode::theorem).M;
    r = assemble_harmonic_sum_bound(plan.x, plan.q, plan.N, plan.k, M, c);
  }
  if (plan.format == Format::json) out << to_json(r).dump(2) << "\n"; else print_human(out, r);
  return finish(plan, r.valid(), err);
}

inline int run_serre(const CommandPlan& plan, std::ostream& out) {
  if (plan.action == "classes") {
    const auto s = serre::residue_classes();
    out << "# modulus " << s.modulus << " classes " << s.classes.size() << "\n";
    for (auto c : s.classes) out << c << "\n";
    return 0;
  }
  out << "p,h\n";
  for (auto p : serre::scan_candidates(plan.lo, plan.hi)) out << p << "," << (p + 1) / serre::kM << "\n";
  return 0;
}

inline int run_verify(const CommandPlan& plan, std::ostream& out, std::ostream& err) {
  const auto I = parse_interval(plan.interval);
  const auto limit = static_cast<std::uint64_t>(std::ceil(kSupportHi * plan.x));
  const auto table = load_table(plan, limit);
  const auto angles = PrimeAngles::build(table);
  const auto& c = PhiConstants::standard();
  std::vector<PrimeWeight> dump;
  const auto rep = verify_theorem(plan.x, plan.q, plan.a, I, angles, c, plan.dump.empty() ? nullptr : &dump);
  bool ok = rep.bound_used.valid();
  nlohmann::ordered_json j;
  j["schema"] = "verify";
  j["schema_version"] = kJsonSchemaVersion;
  j["x"] = plan.x;
  j["q"] = plan.q;
  j["a"] = plan.a;
  j["interval"] = {I.a, I.b};
  j["theorem"] = to_json(rep);
  if (plan.n_given) {
    auto& hs = j["harmonic"] = nlohmann::ordered_json::array();
    for (const auto& chi : characters(plan.q)) {
      const auto h = harmonic_sum(static_cast<unsigned>(plan.n), chi, plan.x, angles, c);
      auto e = to_json(h);
      e["character_index"] = chi.index();
      e["conductor"] = chi.conductor();
      hs.push_back(e);
      ok = ok && h.bound_used.valid();
    }
  }
  j["constants_checksum"] = constants::checksum();
  if (!plan.dump.empty()) {
    std::ofstream f(plan.dump);
    if (!f) throw std::runtime_error("verify: cannot open " + plan.dump);
    f << "p,theta,weight\n";
    for (const auto& w : dump) f << w.p << "," << num(w.theta) << "," << num(w.weight) << "\n";
    if (!f) throw std::runtime_error("verify: write failed for " + plan.dump);
  }
  if (plan.format == Format::json) {
    out << j.dump(2) << "\n";
  } else {
    out << "# constants " << constants::checksum() << "\n";
    out << "sum = " << num(rep.value.real()) << "\nmain_term = " << num(rep.main_term)
        << "\ndiscrepancy = " << num(rep.discrepancy) << "\nbound = " << num(rep.bound_used.value)
        << "\nsatisfied = " << (rep.satisfied ? "true" : "false")
        << "\nthreshold_valid = " << (rep.bound_used.valid() ? "true" : "false") << "\n";
  }
  return finish(plan, ok, err);
}

inline int run_census(const CommandPlan& plan, std::ostream& out) {
  const auto I = parse_interval(plan.interval);
  const auto limit = static_cast<std::uint64_t>(std::floor(plan.x));
  const auto table = load_table(plan, limit);
  const auto angles = PrimeAngles::build(table);
  const auto c = sato_tate_census(plan.x, I, angles);
  if (plan.format == Format::json) {
    out << to_json(c).dump(2) << "\n";
  } else {
    out << "count = " << c.count << "\npi(x) = " << c.prime_count << "\nfraction = " << num(c.fraction())
        << "\nmu_st = " << num(c.mu) << "\nexpected = " << num(c.expected)
        << "\ndiscrepancy = " << num(c.discrepancy) << "\n";
  }
  return 0;
}

}  // namespace detail

inline int run(const CommandPlan& plan, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  try {
    if (plan.subcommand == "tau") return detail::run_tau(plan, out);
    if (plan.subcommand == "angle") return detail::run_angle(plan, out);
    if (plan.subcommand == "extremal") return detail::run_extremal(plan, out);
    if (plan.subcommand == "constants") return detail::run_constants(plan, out, err);
    if (plan.subcommand == "bound") return detail::run_bound(plan, out, err);
    if (plan.subcommand == "serre") return detail::run_serre(plan, out);
    if (plan.subcommand == "verify") return detail::run_verify(plan, out, err);
    if (plan.subcommand == "census") return detail::run_census(plan, out);
    err << "satotate: unknown subcommand " << plan.subcommand << "\n";
    return 1;
  } catch (const HypothesisError& e) {
    err << "satotate: " << e.what() << "\n";
    return plan.strict ? 2 : 1;
  } catch (const std::exception& e) {
    err << "satotate: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace satotate::cli
