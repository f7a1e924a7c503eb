#pragma once

// Word-size modular arithmetic for exact series computation: Montgomery
// multiplication modulo 31-bit NTT-friendly primes, an in-place radix-2
// number-theoretic transform, and Garner reconstruction of signed integers
// from a residue system.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace satotate {

// Exact integer type for coefficients. Overflow throws rather than wraps.
using Integer = boost::multiprecision::checked_int256_t;
using WideInteger = boost::multiprecision::checked_int512_t;

namespace modular {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

struct NttPrime {
  u32 p;
  u32 generator;
  int two_adicity;  // largest k with 2^k | p - 1
};

// Primes c * 2^25 + 1 below 2^31, largest first; product of the first five
// exceeds 2^153.
inline constexpr std::array<NttPrime, 7> kNttPrimes = {{
    {2113929217u, 5u, 25},
    {2013265921u, 31u, 27},
    {1811939329u, 13u, 26},
    {1711276033u, 29u, 25},
    {1107296257u, 10u, 25},
    {469762049u, 3u, 26},
    {167772161u, 3u, 25},
}};

inline constexpr int kMaxTransformLog2 = 25;

class Montgomery {
 public:
  explicit Montgomery(u32 p) : p_(p) {
    if (p % 2 == 0 || p >= (1u << 31)) {
      throw std::invalid_argument("Montgomery: modulus must be odd and < 2^31");
    }
    u32 inv = p;  // Newton iteration for p^{-1} mod 2^32
    for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
    neg_inv_ = ~inv + 1;
    r2_ = static_cast<u32>((static_cast<unsigned __int128>(1) << 64) % p);
  }

  u32 modulus() const { return p_; }

  u32 reduce(u64 t) const {
    u32 m = static_cast<u32>(t) * neg_inv_;
    u32 r = static_cast<u32>((t + static_cast<u64>(m) * p_) >> 32);
    return r >= p_ ? r - p_ : r;
  }
  u32 mul(u32 a, u32 b) const { return reduce(static_cast<u64>(a) * b); }
  u32 add(u32 a, u32 b) const {
    u32 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p_ - b; }
  u32 to_mont(u32 a) const { return mul(a % p_, r2_); }
  u32 from_mont(u32 a) const { return reduce(a); }
  u32 pow(u32 base_mont, u64 e) const {
    u32 r = to_mont(1);
    while (e) {
      if (e & 1) r = mul(r, base_mont);
      base_mont = mul(base_mont, base_mont);
      e >>= 1;
    }
    return r;
  }

 private:
  u32 p_;
  u32 neg_inv_;
  u32 r2_;
};

// Twiddle tables laid out as roots[len + j] = w_{2 len}^j, in Montgomery form.
class NttPlan {
 public:
  NttPlan(const NttPrime& prime, int log2_size) : mont_(prime.p), log2_(log2_size) {
    if (log2_size < 1 || log2_size > prime.two_adicity) {
      throw std::invalid_argument("NttPlan: transform size not supported by prime");
    }
    const std::size_t n = std::size_t{1} << log2_size;
    roots_.assign(n, 0);
    inv_roots_.assign(n, 0);
    const u32 g = mont_.to_mont(prime.generator);
    for (std::size_t len = 1; len < n; len <<= 1) {
      u32 w = mont_.pow(g, (u64{prime.p} - 1) / (2 * len));
      u32 wi = mont_.pow(w, u64{prime.p} - 2);
      u32 cur = mont_.to_mont(1), curi = cur;
      for (std::size_t j = 0; j < len; ++j) {
        roots_[len + j] = cur;
        inv_roots_[len + j] = curi;
        cur = mont_.mul(cur, w);
        curi = mont_.mul(curi, wi);
      }
    }
    inv_n_ = mont_.pow(mont_.to_mont(static_cast<u32>(n % prime.p)), u64{prime.p} - 2);
  }

  std::size_t size() const { return std::size_t{1} << log2_; }
  const Montgomery& mont() const { return mont_; }

  // Natural order in, bit-reversed order out.
  void forward(std::span<u32> a) const {
    const std::size_t n = size();
    for (std::size_t len = n >> 1; len >= 1; len >>= 1) {
      for (std::size_t i = 0; i < n; i += 2 * len) {
        for (std::size_t j = 0; j < len; ++j) {
          u32 u = a[i + j], v = a[i + j + len];
          a[i + j] = mont_.add(u, v);
          a[i + j + len] = mont_.mul(mont_.sub(u, v), roots_[len + j]);
        }
      }
    }
  }

  // Bit-reversed order in, natural order out, scaled by 1/n.
  void inverse(std::span<u32> a) const {
    const std::size_t n = size();
    for (std::size_t len = 1; len < n; len <<= 1) {
      for (std::size_t i = 0; i < n; i += 2 * len) {
        for (std::size_t j = 0; j < len; ++j) {
          u32 u = a[i + j];
          u32 v = mont_.mul(a[i + j + len], inv_roots_[len + j]);
          a[i + j] = mont_.add(u, v);
          a[i + j + len] = mont_.sub(u, v);
        }
      }
    }
    for (auto& x : a) x = mont_.mul(x, inv_n_);
  }

 private:
  Montgomery mont_;
  int log2_;
  std::vector<u32> roots_;
  std::vector<u32> inv_roots_;
  u32 inv_n_;
};

// Squares a power series (Montgomery form, length `len`) modulo x^len.
inline void square_truncated(std::vector<u32>& series, const NttPlan& plan) {
  const std::size_t len = series.size();
  if (2 * len > plan.size() + 1) throw std::invalid_argument("square_truncated: plan too small");
  std::vector<u32> buf(plan.size(), 0);
  std::copy(series.begin(), series.end(), buf.begin());
  plan.forward(buf);
  for (auto& x : buf) x = plan.mont().mul(x, x);
  plan.inverse(buf);
  std::copy(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(len), series.begin());
}

// Garner mixed-radix reconstruction of the symmetric residue in
// (-P/2, P/2], P = product of moduli.
class CrtBasis {
 public:
  explicit CrtBasis(std::vector<u32> moduli) : moduli_(std::move(moduli)) {
    const std::size_t k = moduli_.size();
    if (k == 0) throw std::invalid_argument("CrtBasis: empty basis");
    inv_.assign(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        u64 a = moduli_[j] % moduli_[i];
        inv_[i * k + j] = static_cast<u32>(arith_pow(a, moduli_[i] - 2, moduli_[i]));
      }
    }
    product_ = 1;
    prefix_.reserve(k);
    for (u32 m : moduli_) {
      prefix_.push_back(product_);
      product_ *= m;
    }
    half_ = product_ / 2;
  }

  const std::vector<u32>& moduli() const { return moduli_; }
  const Integer& product() const { return product_; }

  Integer reconstruct(std::span<const u32> residues) const {
    const std::size_t k = moduli_.size();
    std::array<u64, 16> digit{};
    for (std::size_t i = 0; i < k; ++i) {
      const u64 m = moduli_[i];
      u64 x = residues[i] % m;
      for (std::size_t j = 0; j < i; ++j) {
        x = (x + m - digit[j] % m) % m;
        x = x * inv_[i * k + j] % m;
      }
      digit[i] = x;
    }
    Integer v = 0;
    for (std::size_t i = 0; i < k; ++i) v += prefix_[i] * digit[i];
    if (v > half_) v -= product_;
    return v;
  }

  // Residue of a signed integer modulo moduli()[i].
  u32 residue(const Integer& v, std::size_t i) const {
    Integer r = v % moduli_[i];
    if (r < 0) r += moduli_[i];
    return static_cast<u32>(r);
  }

 private:
  static u64 arith_pow(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
      if (e & 1) r = r * b % m;
      b = b * b % m;
      e >>= 1;
    }
    return r;
  }

  std::vector<u32> moduli_;
  std::vector<u32> inv_;  // inv_[i*k+j] = moduli_[j]^{-1} mod moduli_[i]
  std::vector<Integer> prefix_;
  Integer product_;
  Integer half_;
};

}  // namespace modular
}  // namespace satotate
