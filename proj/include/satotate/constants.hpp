#pragma once

// Published numeric constants used by the bound evaluators, each with a
// short note on where it enters. The checksum is stamped into every report.

#include <array>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace satotate::constants {

struct Entry {
  std::string_view name;
  double value;
  std::string_view cite;
};

// Zero counting and gamma factors.
inline constexpr double kZeroCountLogCoeff = 21.0 / 2.0;
inline constexpr double kZeroCountShift = 9.0 / 2.0;
inline constexpr double kOneSeventh = 1.0 / 7.0;
inline constexpr double kGammaShift = 3.0;
inline constexpr double kGammaLogCoeff = 7.0 / 2.0;
inline constexpr double kZetaLogDerivAt2 = 1.14;  // -2 zeta'/zeta(2) ceiling

// Sum over nontrivial zeros, n >= 1.
inline constexpr double kNontrivNine2 = 9.0 / 2.0;
inline constexpr double kNontriv36 = 36.0;
inline constexpr double kNontriv7 = 7.0;
inline constexpr double kNontriv24 = 24.0;
inline constexpr double kNontriv8 = 8.0;
inline constexpr double kNontrivLogShift = 8.0;  // (n + 8) log n

// Sum over nontrivial zeros, n = 0.
inline constexpr double kN0Sqrt = 42.96;
inline constexpr double kN0C0 = 72.8;
inline constexpr double kN0C2 = 23.56;

// Trivial zeros, prime powers.
inline constexpr double kTrivialSlope = 0.004;
inline constexpr double kPrimePowerProof = 3.983;
inline constexpr double kPrimePowerStatement = 9.06;
inline constexpr double kPhiZeroCeiling = 8.0;
inline constexpr double kRosserSchoenfeldSqrt = 1.002;
inline constexpr double kRosserSchoenfeldCube = 3.0;

// Trigonometric polynomial coefficient sums.
inline constexpr double kCoeffSumShift = 21.0 / 5.0;

// Main theorem.
inline constexpr double kThmLogX = 1.31;
inline constexpr double kThmLogLogX = 2.6;
inline constexpr double kThmLogCond = 8.14;
inline constexpr double kThmLogCondFree = 0.0007;
inline constexpr double kThmConst = 15.76;
inline constexpr double kThmC0 = 454.5;
inline constexpr double kThmC2 = 104.9;
inline constexpr double kThmXFloor = 4.6e7;
inline constexpr double kThmQFactor = 7500.0;
inline constexpr double kThmM = 2.0;  // M = 2 x^{1/4} / sqrt(phi(q) log x)

// Application to tau(p) = 0.
inline constexpr double kCorM = 9.75e-9;
inline constexpr double kCorXFloor = 1.554e40;
inline constexpr double kCorSimplifiedXFloor = 1e50;
inline constexpr double kCorLead = 7.15e-7;
inline constexpr double kCorLogLog = 12.28e-7;
inline constexpr double kCorInvLog = 1.69e-5;
inline constexpr double kCorSqrt = 86.96;
inline constexpr double kCorSimplified = 8.45e-7;
inline constexpr double kCorPerClassLead = 2.17e-8;
inline constexpr double kCorPerClassLogLog = 3.71e-8;
inline constexpr double kCorPerClassInvLog = 5.13e-6;
inline constexpr double kCorPerClassSqrt = 2.64;
inline constexpr double kCorClasses = 33.0;
inline constexpr double kPhiOneCeiling = 1.323;

inline constexpr std::array kTable = {
    Entry{"zero_count_log_coeff", kZeroCountLogCoeff, "zero count n(T): (21/2) log(n+|T|+9/2)"},
    Entry{"zero_count_shift", kZeroCountShift, "zero count n(T): shift 9/2"},
    Entry{"one_seventh", kOneSeventh, "zero count n(T): 1/7"},
    Entry{"gamma_shift", kGammaShift, "gamma log-derivative: log(n+|T|+3)"},
    Entry{"gamma_log_coeff", kGammaLogCoeff, "gamma log-derivative: (7/2) log(n+|T|+3)"},
    Entry{"zeta_logderiv_at_2", kZetaLogDerivAt2, "-(n+1) zeta'/zeta(2) <= (n+1)/2 * 1.14"},
    Entry{"nontriv_nine_halves", kNontrivNine2, "nontrivial-zero sum, n >= 1"},
    Entry{"nontriv_36", kNontriv36, "nontrivial-zero sum, n >= 1: 36/n"},
    Entry{"nontriv_7", kNontriv7, "nontrivial-zero sum, n >= 1: n/2 + 7 + 24/n"},
    Entry{"nontriv_24", kNontriv24, "nontrivial-zero sum, n >= 1: 24/n"},
    Entry{"nontriv_8", kNontriv8, "nontrivial-zero sum, n >= 1: C2 (1 + 8/n)"},
    Entry{"nontriv_log_shift", kNontrivLogShift, "nontrivial-zero sum, n >= 1: (n+8) log n"},
    Entry{"n0_sqrt", kN0Sqrt, "nontrivial-zero sum, n = 0: sqrt(C0 C2)(42.96 + ...)"},
    Entry{"n0_c0", kN0C0, "nontrivial-zero sum, n = 0: (72.8 + ...) C0"},
    Entry{"n0_c2", kN0C2, "nontrivial-zero sum, n = 0: 23.56 C2"},
    Entry{"trivial_slope", kTrivialSlope, "trivial zeros: .004(n+2) + Phi(0)"},
    Entry{"prime_power_proof", kPrimePowerProof, "prime-power error, concluding display"},
    Entry{"prime_power_statement", kPrimePowerStatement, "prime-power error, as stated"},
    Entry{"phi_zero_ceiling", kPhiZeroCeiling, "|Phi(0)| <= 8"},
    Entry{"rosser_schoenfeld_sqrt", kRosserSchoenfeldSqrt, "psi - theta < 1.002 sqrt(x) + 3 x^{1/3}"},
    Entry{"rosser_schoenfeld_cube", kRosserSchoenfeldCube, "psi - theta < 1.002 sqrt(x) + 3 x^{1/3}"},
    Entry{"coeff_sum_shift", kCoeffSumShift, "sum |F(n)| <= (2/pi) log M + 21/5"},
    Entry{"thm_log_x", kThmLogX, "main theorem: 1.31 log x"},
    Entry{"thm_log_log_x", kThmLogLogX, "main theorem: -2.6 log log x"},
    Entry{"thm_log_cond", kThmLogCond, "main theorem: 8.14 log(Nq(k-1))"},
    Entry{"thm_log_cond_free", kThmLogCondFree, "main theorem: 0.0007 log(Nq(k-1))"},
    Entry{"thm_const", kThmConst, "main theorem: 15.76"},
    Entry{"thm_c0", kThmC0, "main theorem: 454.5 C0"},
    Entry{"thm_c2", kThmC2, "main theorem: 104.9 C2"},
    Entry{"thm_x_floor", kThmXFloor, "main theorem: x >= 4.6e7"},
    Entry{"thm_q_factor", kThmQFactor, "main theorem: x >= 7500 (phi(q) log phi(q))^2"},
    Entry{"thm_m", kThmM, "main theorem: M = 2 x^{1/4} / sqrt(phi(q) log x)"},
    Entry{"cor_m", kCorM, "tau(p)=0 count: M = 9.75e-9 x^{1/4} / sqrt(log x)"},
    Entry{"cor_x_floor", kCorXFloor, "tau(p)=0 count: x >= 1.554e40"},
    Entry{"cor_simplified_x_floor", kCorSimplifiedXFloor, "tau(p)=0 count: simplified for x >= 1e50"},
    Entry{"cor_lead", kCorLead, "tau(p)=0 count: x^{3/4}/sqrt(log x)"},
    Entry{"cor_log_log", kCorLogLog, "tau(p)=0 count: x^{3/4} log log x/(log x)^{3/2}"},
    Entry{"cor_inv_log", kCorInvLog, "tau(p)=0 count: x^{3/4}/(log x)^{3/2}"},
    Entry{"cor_sqrt", kCorSqrt, "tau(p)=0 count: sqrt(x) log x"},
    Entry{"cor_simplified", kCorSimplified, "tau(p)=0 count, simplified"},
    Entry{"cor_per_class_lead", kCorPerClassLead, "per-class count: x^{3/4}/sqrt(log x)"},
    Entry{"cor_per_class_log_log", kCorPerClassLogLog, "per-class count: log log term"},
    Entry{"cor_per_class_inv_log", kCorPerClassInvLog, "per-class count: (log x)^{-3/2} term"},
    Entry{"cor_per_class_sqrt", kCorPerClassSqrt, "per-class count: sqrt(x) log x"},
    Entry{"cor_classes", kCorClasses, "admissible residue classes"},
    Entry{"phi_one_ceiling", kPhiOneCeiling, "Phi(1) <= 1.323"},
};

// FNV-1a over "name=value\n" lines with values at 17 significant digits.
inline std::string checksum() {
  std::uint64_t h = 14695981039346656037ull;
  char buf[96];
  for (const auto& e : kTable) {
    const int len = std::snprintf(buf, sizeof buf, "%.*s=%.17g\n",
                                  static_cast<int>(e.name.size()), e.name.data(), e.value);
    for (int i = 0; i < len; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ull;
    }
  }
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace satotate::constants
