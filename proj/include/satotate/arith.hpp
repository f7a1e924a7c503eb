#pragma once

// Elementary integer arithmetic on 64-bit words: modular multiply/power,
// deterministic Miller-Rabin, trial-division factorization and totient.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace satotate::arith {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Deterministic for all 64-bit n (first twelve prime bases).
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : small) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : small) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

struct PrimePower {
  u64 p;
  int e;
};

// Trial division; intended for moduli with small prime factors or
// modest size (the Serre modulus factors over primes <= 691).
inline std::vector<PrimePower> factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<PrimePower> out;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline u64 ipow(u64 b, int e) {
  u64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline u64 totient(u64 n) {
  u64 r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

inline bool is_squarefree(u64 n) {
  for (auto pe : factorize(n)) {
    if (pe.e > 1) return false;
  }
  return true;
}

// If n = p^m for a prime p and m >= 1, returns {p, m}; otherwise {0, 0}.
inline std::pair<u64, int> prime_power_decompose(u64 n) {
  if (n < 2) return {0, 0};
  auto f = factorize(n);
  if (f.size() != 1) return {0, 0};
  return {f[0].p, f[0].e};
}

}  // namespace satotate::arith
