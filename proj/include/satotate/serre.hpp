#pragma once

// Congruence conditions a prime p with tau(p) = 0 must satisfy:
// p = h M - 1 with M = 3094972416000, h + 1 a nonzero square mod 23 and
// h = 0, 30 or 48 mod 49. Modulo Q = 23 * 49 * M these are 33 classes.

#include "arith.hpp"
#include "bounds.hpp"
#include "errors.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace satotate::serre {

inline constexpr std::uint64_t kM = kSerreM;
inline constexpr std::uint64_t kAux23 = 23;
inline constexpr std::uint64_t kAux49 = 49;
inline constexpr std::uint64_t kQ = kSerreQ;
inline constexpr std::array<std::uint64_t, 3> kAdmissibleMod49 = {0, 30, 48};
inline constexpr std::uint64_t kDefaultScanBudget = 100'000'000;  // values of h examined

static_assert(kQ == kAux23 * kAux49 * kM);
static_assert(kQ / kM == 1127);

// Nonzero squares modulo 23.
inline bool is_qr23(std::uint64_t r) {
  r %= 23;
  if (r == 0) return false;
  for (std::uint64_t s = 1; s < 23; ++s)
    if (s * s % 23 == r) return true;
  return false;
}

inline bool admissible_h(std::uint64_t h) {
  if (!is_qr23(h + 1)) return false;
  return std::find(kAdmissibleMod49.begin(), kAdmissibleMod49.end(), h % 49) != kAdmissibleMod49.end();
}

struct ResidueClassSet {
  std::uint64_t modulus = kQ;
  std::vector<std::uint64_t> classes;  // ascending
};

inline ResidueClassSet residue_classes() {
  ResidueClassSet s;
  for (std::uint64_t h = 0; h < kAux23 * kAux49; ++h) {
    if (admissible_h(h)) s.classes.push_back((h * kM + kQ - 1) % kQ);
  }
  std::sort(s.classes.begin(), s.classes.end());
  return s;
}

enum class Witness { candidate, not_minus_one_mod_m, h_plus_one_not_square_mod_23, h_not_admissible_mod_49 };

inline const char* to_string(Witness w) {
  switch (w) {
    case Witness::candidate: return "candidate";
    case Witness::not_minus_one_mod_m: return "p+1 not divisible by M";
    case Witness::h_plus_one_not_square_mod_23: return "h+1 not a nonzero square mod 23";
    case Witness::h_not_admissible_mod_49: return "h mod 49 not in {0,30,48}";
  }
  return "?";
}

struct CandidateCheck {
  bool candidate = false;
  Witness witness = Witness::not_minus_one_mod_m;
  std::uint64_t h = 0;
};

inline CandidateCheck is_candidate(std::uint64_t p) {
  CandidateCheck c;
  if ((p + 1) % kM != 0 || p + 1 == 0) return c;
  c.h = (p + 1) / kM;
  if (!is_qr23(c.h + 1)) {
    c.witness = Witness::h_plus_one_not_square_mod_23;
  } else if (std::find(kAdmissibleMod49.begin(), kAdmissibleMod49.end(), c.h % 49) ==
             kAdmissibleMod49.end()) {
    c.witness = Witness::h_not_admissible_mod_49;
  } else {
    c.candidate = true;
    c.witness = Witness::candidate;
  }
  return c;
}

// Primes in [lo, hi] passing is_candidate; walks h directly, so only
// admissible h are tested for primality.
inline std::vector<std::uint64_t> scan_candidates(std::uint64_t lo, std::uint64_t hi,
                                                  std::uint64_t budget = kDefaultScanBudget) {
  std::vector<std::uint64_t> out;
  if (hi < lo) return out;
  const std::uint64_t h_lo = std::max<std::uint64_t>(1, (lo + 1 + kM - 1) / kM);
  const std::uint64_t h_hi = hi == UINT64_MAX ? hi / kM : (hi + 1) / kM;
  if (h_hi < h_lo) return out;
  if (h_hi - h_lo + 1 > budget) {
    throw ResourceLimitError("scan_candidates: " + std::to_string(h_hi - h_lo + 1) +
                             " multipliers exceed budget " + std::to_string(budget));
  }
  if (h_hi > (UINT64_MAX - 1) / kM) throw ResourceLimitError("scan_candidates: range overflows 64 bits");
  for (std::uint64_t h = h_lo; h <= h_hi; ++h) {
    if (!admissible_h(h)) continue;
    const std::uint64_t p = h * kM - 1;
    if (p >= lo && p <= hi && arith::is_prime(p)) out.push_back(p);
  }
  return out;
}

}  // namespace satotate::serre
