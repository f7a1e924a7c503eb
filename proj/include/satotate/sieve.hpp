#pragma once

// Segmented sieve of Eratosthenes over [lo, hi].

#include "errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace satotate {

inline constexpr std::uint64_t kDefaultSieveCap = 250'000'000;

namespace detail {

inline std::vector<std::uint32_t> small_primes_upto(std::uint32_t limit) {
  std::vector<char> composite(limit + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return primes;
}

}  // namespace detail

// All primes in [lo, hi], ascending.
inline std::vector<std::uint64_t> sieve_primes(std::uint64_t lo, std::uint64_t hi,
                                               std::uint64_t cap = kDefaultSieveCap) {
  if (hi > cap) {
    throw ResourceLimitError("sieve_primes: upper limit " + std::to_string(hi) +
                             " exceeds cap " + std::to_string(cap));
  }
  std::vector<std::uint64_t> out;
  lo = std::max<std::uint64_t>(lo, 2);
  if (hi < lo) return out;

  const auto root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(hi))) + 1;
  const auto base = detail::small_primes_upto(root);

  constexpr std::uint64_t kSegment = 1 << 18;
  std::vector<char> mark(kSegment);
  for (std::uint64_t seg_lo = lo; seg_lo <= hi; seg_lo += kSegment) {
    const std::uint64_t seg_hi = std::min(hi, seg_lo + kSegment - 1);
    std::fill(mark.begin(), mark.end(), 1);
    for (std::uint64_t p : base) {
      if (p * p > seg_hi) break;
      std::uint64_t start = std::max(p * p, (seg_lo + p - 1) / p * p);
      for (std::uint64_t j = start; j <= seg_hi; j += p) mark[j - seg_lo] = 0;
    }
    for (std::uint64_t n = seg_lo; n <= seg_hi; ++n) {
      if (mark[n - seg_lo]) out.push_back(n);
    }
    if (seg_hi == hi) break;
  }
  return out;
}

// Smallest-prime-factor table for 0..limit (spf[0] = spf[1] = 0).
inline std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit) {
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i]) continue;
    for (std::uint64_t j = i; j <= limit; j += i) {
      if (!spf[j]) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  return spf;
}

}  // namespace satotate
