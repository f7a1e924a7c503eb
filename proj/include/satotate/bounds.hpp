#pragma once

// Explicit bounds as pure functions of (n, x, N, q, k) and the test-function
// constants. Every evaluator returns a BoundReport whose value is the
// left-to-right sum of its named terms.

#include "arith.hpp"
#include "constants.hpp"
#include "errors.hpp"
#include "extremal.hpp"
#include "testfn.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace satotate {

struct Term {
  std::string name;
  double value = 0;
};

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct BoundReport {
  std::string kind;
  double value = 0;
  std::vector<Term> terms;
  std::vector<Check> validity;
  std::vector<std::pair<std::string, double>> inputs;
  std::vector<std::pair<std::string, double>> extras;
  std::vector<std::string> notes;
  PhiConstants consts;
  std::string constants_checksum = constants::checksum();

  void add(std::string name, double v) { terms.push_back({std::move(name), v}); }
  void check(std::string name, bool ok, std::string detail = {}) {
    validity.push_back({std::move(name), ok, std::move(detail)});
  }
  void input(std::string name, double v) { inputs.emplace_back(std::move(name), v); }
  void extra(std::string name, double v) { extras.emplace_back(std::move(name), v); }

  BoundReport& finalize() {
    value = 0;
    for (const auto& t : terms) value += t.value;
    return *this;
  }

  bool valid() const {
    for (const auto& c : validity)
      if (!c.ok) return false;
    return true;
  }

  std::optional<double> term(std::string_view name) const {
    for (const auto& t : terms)
      if (t.name == name) return t.value;
    return std::nullopt;
  }

  std::optional<double> extra_value(std::string_view name) const {
    for (const auto& [k, v] : extras)
      if (k == name) return v;
    return std::nullopt;
  }

  const Check* find_check(std::string_view name) const {
    for (const auto& c : validity)
      if (c.name == name) return &c;
    return nullptr;
  }
};

struct BoundInputs {
  int n = 0;
  double x = 1e6;
  std::uint64_t N = 1;
  std::uint64_t q = 1;
  int k = 12;
  PhiConstants consts;
  std::optional<std::uint64_t> a;
};

// log(N q (k - 1)), the log of the analytic conductor at the archimedean shift.
inline double log_conductor(std::uint64_t N, std::uint64_t q, int k) {
  return std::log(static_cast<double>(N)) + std::log(static_cast<double>(q)) +
         std::log(static_cast<double>(k - 1));
}

inline double zero_count_bound(int n, double T, std::uint64_t N, std::uint64_t q, int k) {
  const double l = std::log(n + std::fabs(T) + constants::kZeroCountShift);
  return 1.5 * (n + 1) * (log_conductor(N, q, k) + l + constants::kOneSeventh) +
         constants::kZeroCountLogCoeff * l;
}

inline double gamma_logderiv_bound(int n, double T, int k) {
  const double l = std::log(n + std::fabs(T) + constants::kGammaShift);
  return 0.5 * (n + 1) * (std::log(static_cast<double>(k - 1)) + l - 1.0) +
         constants::kGammaLogCoeff * l;
}

inline double zeta_logderiv_term(int n) { return (n + 1) * (constants::kZetaLogDerivAt2 / 2.0); }

// Sum over nontrivial zeros for n = 0.
inline BoundReport zero_sum_bound_n0(double x, std::uint64_t N, std::uint64_t q, int k,
                                     const PhiConstants& c) {
  BoundReport r;
  r.kind = "zero_sum_n0";
  r.consts = c;
  r.input("x", x);
  r.input("N", static_cast<double>(N));
  r.input("q", static_cast<double>(q));
  r.input("k", k);
  const double sx = std::sqrt(x), lc = log_conductor(N, q, k), s = c.sqrtC0C2();
  r.add("sqrtC0C2*42.96", sx * s * constants::kN0Sqrt);
  r.add("sqrtC0C2*2logcond", sx * s * 2.0 * lc);
  r.add("C0*72.8", sx * constants::kN0C0 * c.C0);
  r.add("C0*6logcond", sx * 6.0 * lc * c.C0);
  r.add("C2*23.56", sx * constants::kN0C2 * c.C2);
  return r.finalize();
}

// Sum over nontrivial zeros; n = 0 is routed to zero_sum_bound_n0.
inline BoundReport nontrivial_zero_sum_bound(int n, double x, std::uint64_t N, std::uint64_t q,
                                             int k, const PhiConstants& c) {
  if (n == 0) return zero_sum_bound_n0(x, N, q, k, c);
  if (n < 0) throw std::invalid_argument("nontrivial_zero_sum_bound: n must be >= 0");
  BoundReport r;
  r.kind = "nontrivial_zero_sum";
  r.consts = c;
  r.input("n", n);
  r.input("x", x);
  r.input("N", static_cast<double>(N));
  r.input("q", static_cast<double>(q));
  r.input("k", k);
  const double two_sx = 2.0 * std::sqrt(x), K = c.K(), s = c.sqrtC0C2();
  const double dn = n;
  r.add("K*(n+8)log(n)", two_sx * K * (dn + constants::kNontrivLogShift) * std::log(dn));
  r.add("K*(n+1)(1/7+logcond)",
        two_sx * K * (dn + 1) * (constants::kOneSeventh + log_conductor(N, q, k)));
  r.add("K*(9/2+36/n)", two_sx * K * (constants::kNontrivNine2 + constants::kNontriv36 / dn));
  r.add("sqrtC0C2*(n/2+7+24/n)",
        two_sx * s * (dn / 2 + constants::kNontriv7 + constants::kNontriv24 / dn));
  r.add("C2*(1+8/n)", two_sx * c.C2 * (1.0 + constants::kNontriv8 / dn));
  return r.finalize();
}

inline BoundReport trivial_zero_bound(int n, const PhiConstants& c, double x = 1e6) {
  BoundReport r;
  r.kind = "trivial_zero";
  r.consts = c;
  r.input("n", n);
  r.input("x", x);
  r.add("0.004(n+2)", constants::kTrivialSlope * (n + 2));
  r.add("Phi(0)", c.Phi0);
  r.check("x>=1e6", x >= 1e6);
  r.check("|Phi(0)|<=8", std::fabs(c.Phi0) <= constants::kPhiZeroCeiling);
  return r.finalize();
}

enum class PrimePowerMode { proof, statement };

inline BoundReport prime_power_error_bound(int n, double x, std::uint64_t N,
                                           PrimePowerMode mode = PrimePowerMode::proof) {
  BoundReport r;
  r.kind = "prime_power_error";
  r.input("n", n);
  r.input("x", x);
  r.input("N", static_cast<double>(N));
  const double proof = constants::kPrimePowerProof, stmt = constants::kPrimePowerStatement;
  const double coeff = mode == PrimePowerMode::proof ? proof : stmt;
  r.add("coeff*(n+1)sqrt(x)", coeff * (n + 1) * std::sqrt(x));
  r.add("2(n+1)log(N)", 2.0 * (n + 1) * std::log(static_cast<double>(N)));
  r.check("x>1e6", x > 1e6);
  r.finalize();
  const double alt = (mode == PrimePowerMode::proof ? stmt : proof) * (n + 1) * std::sqrt(x) +
                     2.0 * (n + 1) * std::log(static_cast<double>(N));
  r.extra("coeff_proof", proof);
  r.extra("coeff_statement", stmt);
  r.extra("value_other_mode", alt);
  r.notes.push_back(mode == PrimePowerMode::proof
                        ? "mode=proof (3.983); the stated constant 9.06 is reported as value_other_mode"
                        : "mode=statement (9.06); the derived constant 3.983 is reported as value_other_mode");
  return r;
}

// The per-character bound: nontrivial zeros + trivial zeros + prime powers,
// with the last two absorbed into 2 sqrt(x) * 2(n+1) (n >= 1) or 2 sqrt(x)
// (n = 0) as displayed. The absorption check records whether the unabsorbed
// sum actually fits under the absorbed term.
inline BoundReport prop33_bound(int n, double x, std::uint64_t N, std::uint64_t q, int k,
                                const PhiConstants& c) {
  BoundReport r;
  r.kind = "prop33";
  r.consts = c;
  r.input("n", n);
  r.input("x", x);
  r.input("N", static_cast<double>(N));
  r.input("q", static_cast<double>(q));
  r.input("k", k);
  const auto nontriv = nontrivial_zero_sum_bound(n, x, N, q, k, c);
  for (const auto& t : nontriv.terms) r.add("zeros:" + t.name, t.value);
  const double sx = std::sqrt(x), logN = std::log(static_cast<double>(N));
  const auto triv = trivial_zero_bound(n, c, x);
  const auto pp = prime_power_error_bound(n, x, N);
  const double unabsorbed = triv.value + pp.term("coeff*(n+1)sqrt(x)").value();
  double absorbed = 0;
  if (n >= 1) {
    absorbed = 2.0 * sx * 2.0 * (n + 1);
    r.add("2sqrt(x)*2(n+1)", absorbed);
    r.add("2(n+1)log(N)", 2.0 * (n + 1) * logN);
  } else {
    absorbed = 2.0 * sx;
    r.add("2sqrt(x)", absorbed);
    r.add("2log(N)", 2.0 * logN);
  }
  r.check("x>=1e6", x >= 1e6);
  r.check("|Phi(0)|<=8", std::fabs(c.Phi0) <= constants::kPhiZeroCeiling);
  r.check("absorption", unabsorbed <= absorbed,
          "trivial + prime-power contributions " + std::to_string(unabsorbed) +
              " vs absorbed term " + std::to_string(absorbed));
  r.extra("trivial_zero_bound", triv.value);
  r.extra("prime_power_sqrt_term", pp.term("coeff*(n+1)sqrt(x)").value());
  r.extra("unabsorbed_total", nontriv.value + unabsorbed + (n >= 1 ? 2.0 * (n + 1) : 2.0) * logN);
  return r.finalize();
}

enum class MMode { theorem, corollary };

struct MChoice {
  double M = 0;
  double threshold = 0;
  bool above_threshold = false;
  bool at_least_8 = false;
  bool valid() const { return above_threshold && at_least_8; }
};

inline double theorem_threshold(std::uint64_t q) {
  const double ph = static_cast<double>(arith::totient(q));
  const double t = ph * std::log(ph);
  return std::max(constants::kThmXFloor, constants::kThmQFactor * t * t);
}

inline MChoice m_choice(double x, std::uint64_t q, MMode mode) {
  MChoice m;
  const double L = std::log(x);
  if (mode == MMode::theorem) {
    const double ph = static_cast<double>(arith::totient(q));
    m.M = constants::kThmM * std::pow(x, 0.25) / std::sqrt(ph * L);
    m.threshold = theorem_threshold(q);
  } else {
    m.M = constants::kCorM * std::pow(x, 0.25) / std::sqrt(L);
    m.threshold = constants::kCorXFloor;
  }
  m.above_threshold = x >= m.threshold;
  m.at_least_8 = m.M >= 8.0;
  return m;
}

inline BoundReport theorem_bound(double x, std::uint64_t q, std::uint64_t N, int k,
                                 const PhiConstants& c) {
  BoundReport r;
  r.kind = "theorem";
  r.consts = c;
  r.input("x", x);
  r.input("q", static_cast<double>(q));
  r.input("N", static_cast<double>(N));
  r.input("k", k);
  const double ph = static_cast<double>(arith::totient(q));
  const double L = std::log(x), LL = std::log(L), lc = log_conductor(N, q, k);
  const double pre = std::pow(x, 0.75) / (ph * std::sqrt(L));
  const double K = 3.0 * c.C0 + c.sqrtC0C2();
  r.add("K*(1.31logx-2.6loglogx+8.14logcond)",
        pre * K * (constants::kThmLogX * L - constants::kThmLogLogX * LL + constants::kThmLogCond * lc));
  r.add("2Phi(1)logx", pre * 2.0 * c.Phi1 * L);
  r.add("0.0007logcond", pre * constants::kThmLogCondFree * lc);
  r.add("15.76+454.5C0+104.9C2",
        pre * (constants::kThmConst + constants::kThmC0 * c.C0 + constants::kThmC2 * c.C2));
  const auto m = m_choice(x, q, MMode::theorem);
  r.check("x>=threshold", m.above_threshold, "threshold " + std::to_string(m.threshold));
  r.check("M>=8", m.at_least_8, "M " + std::to_string(m.M));
  r.extra("phi(q)", ph);
  r.extra("M", m.M);
  r.extra("threshold", m.threshold);
  r.extra("leading_coefficient", K * constants::kThmLogX + 2.0 * c.Phi1);
  return r.finalize();
}

// Serre modulus with its factorization checked by multiplication.
inline constexpr std::uint64_t kSerreM = 3094972416000ull;
inline constexpr std::uint64_t kSerreQ = 23ull * 49ull * kSerreM;
static_assert((1ull << 14) * 2187ull * 125ull * 691ull == kSerreM);

inline BoundReport lehmer_bound(double x) {
  BoundReport r;
  r.kind = "lehmer";
  r.input("x", x);
  r.input("N", 1);
  r.input("k", 12);
  r.input("q", static_cast<double>(kSerreQ));
  r.input("classes", constants::kCorClasses);
  const double L = std::log(x), LL = std::log(L), x34 = std::pow(x, 0.75);
  r.add("lead", constants::kCorLead * x34 / std::sqrt(L));
  r.add("loglog", -constants::kCorLogLog * x34 * LL / std::pow(L, 1.5));
  r.add("invlog", constants::kCorInvLog * x34 / std::pow(L, 1.5));
  r.add("sqrt(x)log(x)", constants::kCorSqrt * std::sqrt(x) * L);
  r.finalize();
  const double simplified = constants::kCorSimplified * x34 / std::sqrt(L);
  r.extra("simplified", simplified);
  r.check("four_term_x>=1.554e40", x >= constants::kCorXFloor);
  r.check("simplified_x>=1e50", x >= constants::kCorSimplifiedXFloor);
  r.check("four_term<=simplified", r.value <= simplified,
          "ratio " + std::to_string(r.value / simplified));
  return r;
}

// Smallest x (to a relative 1e-6 in log x) from which the four-term bound
// stays at or below the simplified one; the ratio is decreasing there.
inline double lehmer_simplification_crossover() {
  auto ratio = [](double lx) {
    const double x = std::exp(lx);
    const auto r = lehmer_bound(x);
    return r.value / r.extra_value("simplified").value();
  };
  double lo = std::log(1e40), hi = std::log(1e80);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (ratio(mid) <= 1.0) hi = mid; else lo = mid;
  }
  return std::exp(hi);
}

// Bound on the M-th harmonic sum after substituting the per-character bound
// and the coefficient-sum ceilings, plus the leakage and the prime-divisor
// correction.
inline BoundReport assemble_harmonic_sum_bound(double x, std::uint64_t q, std::uint64_t N, int k,
                                               double M, const PhiConstants& c) {
  BoundReport r;
  r.kind = "assemble";
  r.consts = c;
  r.input("x", x);
  r.input("q", static_cast<double>(q));
  r.input("N", static_cast<double>(N));
  r.input("k", k);
  r.input("M", M);
  const double ph = static_cast<double>(arith::totient(q));
  const double pi = std::numbers::pi;
  const double two_sx = 2.0 * std::sqrt(x), K = c.K(), s = c.sqrtC0C2();
  const double logM = std::log(M), lc = log_conductor(N, q, k), logN = std::log(static_cast<double>(N));
  const double ceil_s2 = weighted_sum_constant() * M / 16.0 + 2.0 / pi * logM + pi;
  const double ceil_s0 = 2.0 / pi * logM + constants::kCoeffSumShift;
  r.add("weighted(n+1)",
        ceil_s2 * (two_sx * (K * (logM + constants::kOneSeventh + lc) + s / 4.0 + 2.0) + logN));
  r.add("weighted_log",
        ceil_s0 * two_sx * (K * (7.0 * logM + constants::kNontrivNine2) + 6.5 * s + c.C2));
  r.add("weighted_inverse",
        (4.0 / M * (logM + 1.0) + 4.0 / pi * (pi * pi / 6.0)) * two_sx *
            (60.0 * s + 108.0 * c.C0 + 8.0 * c.C2));
  r.add("leakage", c.Phi1 * x / ph * 4.0 / M);
  r.add("2log(q)", 2.0 * std::log(static_cast<double>(q)));
  r.check("M>=8", M >= 8.0);
  r.extra("phi(q)", ph);
  return r.finalize();
}

// Coefficients of the per-class count bound for tau(p) = 0 in (x, 2x], as
// x^{3/4}/sqrt(log x), x^{3/4} log log x/(log x)^{3/2}, x^{3/4}/(log x)^{3/2}
// and sqrt(x) log x, obtained from M = c x^{1/4}/sqrt(log x), the per-character
// bound, the coefficient-sum ceilings and (1/phi(q)) sum_chi <= max_chi.
//   lead    = Phi(1) (pi/4) / (phi(q) c) + K (C/32) c
//   loglog  = -K (C/16) c
//   invlog  = 2 (C/16) c [K (log c + 1/7 + log(11 q)) + sqrt(C0 C2)/2 + 2]
//   sqrtlog = 7 K / (4 pi)
struct CorollaryReproduction {
  double phi_q = 0;
  double c = constants::kCorM;
  double K = 0;
  double leakage_part = 0;
  double zero_part = 0;
  double lead = 0, loglog = 0, invlog = 0, sqrtlog = 0;
  double published_lead = constants::kCorPerClassLead;
  double published_loglog = constants::kCorPerClassLogLog;
  double published_invlog = constants::kCorPerClassInvLog;
  double published_sqrtlog = constants::kCorPerClassSqrt;
  double rel_lead = 0, rel_loglog = 0, rel_invlog = 0, rel_sqrtlog = 0;
  double implied_K_lead = 0;               // solving lead for K with our leakage
  double implied_K_lead_without_leak = 0;  // solving lead for K with no leakage term
  double implied_K_loglog = 0;
  double implied_K_sqrtlog = 0;
  // 33-class totals as published vs 33 x per-class
  double scaled_lead = 0, scaled_loglog = 0, scaled_invlog = 0, scaled_sqrtlog = 0;
  bool reproduced = false;  // lead within 5%
  std::vector<std::string> notes;
};

inline CorollaryReproduction corollary_reproduction(const PhiConstants& pc) {
  CorollaryReproduction r;
  const double pi = std::numbers::pi;
  r.phi_q = static_cast<double>(arith::totient(kSerreQ));
  r.K = pc.K();
  const double C16 = weighted_sum_constant() / 16.0;
  r.leakage_part = pc.Phi1 * (pi / 4.0) / (r.phi_q * r.c);
  r.zero_part = r.K * C16 / 2.0 * r.c;
  r.lead = r.leakage_part + r.zero_part;
  r.loglog = -r.K * C16 * r.c;
  r.invlog = 2.0 * C16 * r.c *
             (r.K * (std::log(r.c) + constants::kOneSeventh + std::log(11.0 * static_cast<double>(kSerreQ))) +
              pc.sqrtC0C2() / 2.0 + 2.0);
  r.sqrtlog = 7.0 * r.K / (4.0 * pi);
  r.rel_lead = r.lead / r.published_lead - 1.0;
  r.rel_loglog = -r.loglog / r.published_loglog - 1.0;
  r.rel_invlog = r.invlog / r.published_invlog - 1.0;
  r.rel_sqrtlog = r.sqrtlog / r.published_sqrtlog - 1.0;
  r.implied_K_lead = (r.published_lead - r.leakage_part) / (C16 / 2.0 * r.c);
  r.implied_K_lead_without_leak = r.published_lead / (C16 / 2.0 * r.c);
  r.implied_K_loglog = r.published_loglog / (C16 * r.c);
  r.implied_K_sqrtlog = r.published_sqrtlog * 4.0 * pi / 7.0;
  r.scaled_lead = constants::kCorClasses * r.published_lead;
  r.scaled_loglog = constants::kCorClasses * r.published_loglog;
  r.scaled_invlog = constants::kCorClasses * r.published_invlog;
  r.scaled_sqrtlog = constants::kCorClasses * r.published_sqrtlog;
  r.reproduced = std::fabs(r.rel_lead) <= 0.05;
  if (r.leakage_part > r.published_lead) {
    r.notes.push_back("leakage term Phi(1)(pi/4)/(phi(q) c) alone exceeds the published leading coefficient");
  }
  if (r.implied_K_lead < 0) {
    r.notes.push_back("no nonnegative K reproduces the published leading coefficient");
  }
  if (std::fabs(r.scaled_invlog / constants::kCorInvLog - 1.0) > 0.05) {
    r.notes.push_back("33 x per-class (log x)^{-3/2} coefficient differs from the published total");
  }
  return r;
}

}  // namespace satotate
