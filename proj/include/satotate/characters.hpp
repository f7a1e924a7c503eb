#pragma once

// Dirichlet characters modulo q via the cyclic decomposition of (Z/qZ)^*.
//
// (Z/p^e)^* is cyclic for odd p; (Z/2^e)^* = <-1> x <5> for e >= 3 and
// <-1> for e = 2. A character is a vector of exponents k_i, one per cyclic
// factor, and chi(g_i) = exp(2 pi i k_i / ord_i). Values are carried as
// integer exponents modulo the group exponent E and turned into complex
// numbers only on request.

#include "arith.hpp"
#include "errors.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace satotate {

inline constexpr std::uint64_t kCharacterModulusBudget = 1'000'000;

class CharacterGroup {
 public:
  struct Factor {
    std::uint64_t prime;
    int exponent;               // p^exponent is the component modulus
    std::uint64_t part;         // p^exponent
    std::uint64_t order;        // order of the cyclic factor
    std::uint64_t generator;    // generator residue mod part
    std::vector<std::int64_t> dlog;  // residue mod part -> index, -1 if not a unit
  };

  // `odd_generators` fixes the primitive root used for each odd prime; when
  // absent the smallest primitive root modulo p^e is chosen.
  explicit CharacterGroup(std::uint64_t q,
                          const std::map<std::uint64_t, std::uint64_t>& odd_generators = {})
      : q_(q) {
    if (q == 0) throw std::invalid_argument("CharacterGroup: q must be positive");
    if (q > kCharacterModulusBudget) {
      throw ResourceLimitError("CharacterGroup: modulus " + std::to_string(q) +
                               " exceeds budget");
    }
    for (auto [p, e] : arith::factorize(q)) {
      const std::uint64_t part = arith::ipow(p, e);
      if (p == 2) {
        if (e >= 2) add_two_power(e, part);
        continue;
      }
      const std::uint64_t order = part / p * (p - 1);
      std::uint64_t g = 0;
      if (auto it = odd_generators.find(p); it != odd_generators.end()) {
        g = it->second % part;
      } else {
        g = primitive_root_prime_power(p, e);
      }
      Factor f{p, e, part, order, g, std::vector<std::int64_t>(part, -1)};
      std::uint64_t x = 1;
      for (std::uint64_t i = 0; i < order; ++i) {
        f.dlog[x] = static_cast<std::int64_t>(i);
        x = x * g % part;
      }
      if (x != 1) throw std::logic_error("CharacterGroup: generator order mismatch");
      for (std::uint64_t r = 1; r < part; ++r) {
        if (r % p != 0 && f.dlog[r] < 0) {
          throw std::logic_error("CharacterGroup: supplied element does not generate");
        }
      }
      factors_.push_back(std::move(f));
    }
    exponent_ = 1;
    size_ = 1;
    for (const auto& f : factors_) {
      exponent_ = std::lcm(exponent_, f.order);
      size_ *= f.order;
    }
    roots_.reserve(exponent_);
    for (std::uint64_t r = 0; r < exponent_; ++r) {
      const double ang = 2.0 * std::numbers::pi * static_cast<double>(r) /
                         static_cast<double>(exponent_);
      roots_.emplace_back(std::cos(ang), std::sin(ang));
    }
  }

  std::uint64_t modulus() const { return q_; }
  std::uint64_t exponent() const { return exponent_; }
  std::uint64_t size() const { return size_; }
  const std::vector<Factor>& factors() const { return factors_; }
  std::complex<double> root(std::uint64_t r) const { return roots_[r % exponent_]; }

  std::map<std::uint64_t, std::uint64_t> odd_generators() const {
    std::map<std::uint64_t, std::uint64_t> m;
    for (const auto& f : factors_) {
      if (f.prime != 2) m[f.prime] = f.generator;
    }
    return m;
  }

 private:
  static std::uint64_t primitive_root_prime_power(std::uint64_t p, int e) {
    const auto fac = arith::factorize(p - 1);
    std::uint64_t g = 2;
    for (;; ++g) {
      bool ok = true;
      for (auto [r, _] : fac) {
        if (arith::powmod(g, (p - 1) / r, p) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) break;
    }
    if (e >= 2 && arith::powmod(g, p - 1, p * p) == 1) g += p;
    return g;
  }

  void add_two_power(int e, std::uint64_t part) {
    // -1 factor (order 2); for e >= 3 also the 5 factor (order 2^(e-2)).
    Factor minus{2, e, part, 2, part - 1, std::vector<std::int64_t>(part, -1)};
    if (e == 2) {
      minus.dlog[1] = 0;
      minus.dlog[3] = 1;
      factors_.push_back(std::move(minus));
      return;
    }
    const std::uint64_t ord5 = part / 4;
    Factor five{2, e, part, ord5, 5, std::vector<std::int64_t>(part, -1)};
    std::uint64_t x = 1;
    for (std::uint64_t k = 0; k < ord5; ++k) {
      minus.dlog[x] = 0;
      five.dlog[x] = static_cast<std::int64_t>(k);
      minus.dlog[part - x] = 1;
      five.dlog[part - x] = static_cast<std::int64_t>(k);
      x = x * 5 % part;
    }
    factors_.push_back(std::move(minus));
    factors_.push_back(std::move(five));
  }

  std::uint64_t q_;
  std::vector<Factor> factors_;
  std::uint64_t exponent_ = 1;
  std::uint64_t size_ = 1;
  std::vector<std::complex<double>> roots_;
};

class DirichletCharacter {
 public:
  DirichletCharacter(std::shared_ptr<const CharacterGroup> group, std::vector<std::uint64_t> k)
      : group_(std::move(group)), k_(std::move(k)) {
    const auto& fs = group_->factors();
    if (k_.size() != fs.size()) throw std::invalid_argument("DirichletCharacter: arity mismatch");
    std::uint64_t radix = 1;
    index_ = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      k_[i] %= fs[i].order;
      index_ += k_[i] * radix;
      radix *= fs[i].order;
    }
  }

  std::uint64_t modulus() const { return group_->modulus(); }
  std::uint64_t index() const { return index_; }
  const std::vector<std::uint64_t>& exponents() const { return k_; }
  const CharacterGroup& group() const { return *group_; }

  // chi(a) = exp(2 pi i r / E); nullopt when gcd(a, q) > 1.
  std::optional<std::uint64_t> value_exponent(std::int64_t a) const {
    const auto& fs = group_->factors();
    const std::uint64_t q = group_->modulus();
    std::int64_t am = a % static_cast<std::int64_t>(q);
    if (am < 0) am += static_cast<std::int64_t>(q);
    if (std::gcd(static_cast<std::uint64_t>(am), q) != 1 && q != 1) return std::nullopt;
    const std::uint64_t E = group_->exponent();
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const auto& f = fs[i];
      const std::int64_t ind = f.dlog[static_cast<std::uint64_t>(am) % f.part];
      if (ind < 0) return std::nullopt;
      r = (r + (k_[i] * static_cast<std::uint64_t>(ind) % f.order) * (E / f.order)) % E;
    }
    return r;
  }

  std::complex<double> value(std::int64_t a) const {
    auto r = value_exponent(a);
    return r ? group_->root(*r) : std::complex<double>(0.0, 0.0);
  }

  bool is_trivial() const {
    for (auto k : k_) {
      if (k) return false;
    }
    return true;
  }

  // (1 - chi(-1)) / 2.
  int parity() const {
    if (modulus() <= 2) return 0;
    return value_exponent(-1).value() == 0 ? 0 : 1;
  }

  std::uint64_t conductor() const {
    std::uint64_t f = 1;
    const auto& fs = group_->factors();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const auto& fac = fs[i];
      if (fac.prime != 2) {
        const std::uint64_t d = fac.order / std::gcd(k_[i], fac.order);
        if (d > 1) {
          int v = 0;
          for (std::uint64_t t = d; t % fac.prime == 0; t /= fac.prime) ++v;
          f *= arith::ipow(fac.prime, v + 1);
        }
      }
    }
    f *= two_part_conductor();
    return f;
  }

  bool is_primitive() const { return conductor() == modulus(); }

  DirichletCharacter conj() const {
    std::vector<std::uint64_t> k = k_;
    const auto& fs = group_->factors();
    for (std::size_t i = 0; i < k.size(); ++i) k[i] = (fs[i].order - k[i]) % fs[i].order;
    return DirichletCharacter(group_, std::move(k));
  }

  // The primitive character chi' (mod conductor) inducing this one.
  DirichletCharacter primitive() const {
    const std::uint64_t f = conductor();
    auto gens = group_->odd_generators();
    auto sub = std::make_shared<const CharacterGroup>(f, gens);
    const auto& fs = group_->factors();
    const auto& subfs = sub->factors();
    std::vector<std::uint64_t> k(subfs.size(), 0);
    for (std::size_t j = 0; j < subfs.size(); ++j) {
      const auto& sf = subfs[j];
      for (std::size_t i = 0; i < fs.size(); ++i) {
        const auto& big = fs[i];
        if (big.prime != sf.prime) continue;
        if (sf.prime == 2 && (sf.generator == 5) != (big.generator == 5)) continue;
        // chi'(g) must equal chi(g): k' / ord' = k / ord.
        k[j] = k_[i] * sf.order / big.order;
        break;
      }
    }
    return DirichletCharacter(sub, std::move(k));
  }

 private:
  std::uint64_t two_part_conductor() const {
    const auto& fs = group_->factors();
    std::uint64_t ka = 0, kb = 0, ordb = 1;
    bool has_two = false;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (fs[i].prime != 2) continue;
      has_two = true;
      if (fs[i].generator == 5) {
        kb = k_[i];
        ordb = fs[i].order;
      } else {
        ka = k_[i];
      }
    }
    if (!has_two) return 1;
    const std::uint64_t d = ordb / std::gcd(kb, ordb);
    if (d > 1) {
      int v = 0;
      for (std::uint64_t t = d; t % 2 == 0; t /= 2) ++v;
      return arith::ipow(2, v + 2);
    }
    return ka ? 4 : 1;
  }

  std::shared_ptr<const CharacterGroup> group_;
  std::vector<std::uint64_t> k_;
  std::uint64_t index_ = 0;
};

// All phi(q) characters modulo q, ordered by index.
inline std::vector<DirichletCharacter> characters(std::uint64_t q) {
  auto group = std::make_shared<const CharacterGroup>(q);
  const auto& fs = group->factors();
  std::vector<DirichletCharacter> out;
  out.reserve(group->size());
  std::vector<std::uint64_t> k(fs.size(), 0);
  for (std::uint64_t idx = 0; idx < group->size(); ++idx) {
    std::uint64_t rem = idx;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      k[i] = rem % fs[i].order;
      rem /= fs[i].order;
    }
    out.emplace_back(group, k);
  }
  return out;
}

inline DirichletCharacter trivial_character(std::uint64_t q) {
  auto group = std::make_shared<const CharacterGroup>(q);
  return DirichletCharacter(group, std::vector<std::uint64_t>(group->factors().size(), 0));
}

}  // namespace satotate
