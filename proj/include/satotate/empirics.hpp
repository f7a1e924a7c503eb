#pragma once

// Weighted sums over primes against the coefficient table: harmonic sums
// with U_n(cos theta_p) chi(p) weights, their prime-power extensions, the
// Sato-Tate census and the progression-restricted left side of the main
// theorem.

#include "bounds.hpp"
#include "characters.hpp"
#include "coeffs.hpp"
#include "extremal.hpp"
#include "quadrature.hpp"
#include "sieve.hpp"
#include "testfn.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace satotate {

// Neumaier's compensated summation.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0;
  double comp_ = 0;
};

class CompensatedComplexSum {
 public:
  void add(std::complex<double> v) {
    re_.add(v.real());
    im_.add(v.imag());
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_, im_;
};

// Sato-Tate angles of every prime up to a limit.
struct PrimeAngles {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;
  std::vector<double> theta;

  static PrimeAngles build(const CoefficientTable& table, std::uint64_t limit = 0) {
    PrimeAngles a;
    a.limit = limit == 0 ? table.limit() : std::min<std::uint64_t>(limit, table.limit());
    a.primes = sieve_primes(2, a.limit);
    a.theta.reserve(a.primes.size());
    for (auto p : a.primes) {
      a.theta.push_back(angle_from_coefficient(p, table[p], table.form().weight).theta);
    }
    return a;
  }

  // Index range of primes in [lo, hi].
  std::pair<std::size_t, std::size_t> range(double lo, double hi) const {
    auto b = std::lower_bound(primes.begin(), primes.end(), lo,
                              [](std::uint64_t p, double v) { return static_cast<double>(p) < v; });
    auto e = std::upper_bound(primes.begin(), primes.end(), hi,
                              [](double v, std::uint64_t p) { return v < static_cast<double>(p); });
    return {static_cast<std::size_t>(b - primes.begin()), static_cast<std::size_t>(e - primes.begin())};
  }

  double theta_of(std::uint64_t p) const {
    auto it = std::lower_bound(primes.begin(), primes.end(), p);
    if (it == primes.end() || *it != p) throw std::invalid_argument("theta_of: not a tabulated prime");
    return theta[static_cast<std::size_t>(it - primes.begin())];
  }
};

inline double phi_x(double t, double x) { return phi(t / x); }

struct SumReport {
  std::complex<double> value;
  double main_term = 0;
  double discrepancy = 0;
  BoundReport bound_used;
  bool satisfied = false;
  std::size_t terms = 0;
};

namespace detail {

inline void require_support(double x, std::uint64_t limit) {
  if (!(x > 0)) throw std::invalid_argument("sum: x must be positive");
  if (kSupportHi * x > static_cast<double>(limit)) {
    throw std::out_of_range("sum: table limit " + std::to_string(limit) +
                            " is below 5x/2 = " + std::to_string(kSupportHi * x));
  }
}

}  // namespace detail

// sum_{p} U_n(cos theta_p) log(p) chi(p) phi_x(p) against delta Phi(1) x and
// the per-character bound at the conductor of chi.
inline SumReport harmonic_sum(unsigned n, const DirichletCharacter& chi, double x,
                              const PrimeAngles& angles, const PhiConstants& consts) {
  detail::require_support(x, angles.limit);
  const auto [b, e] = angles.range(kSupportLo * x, kSupportHi * x);
  CompensatedComplexSum acc;
  SumReport r;
  const double ceiling = n + 1.0 + 1e-9;
  for (std::size_t i = b; i < e; ++i) {
    const auto p = angles.primes[i];
    const double w = phi_x(static_cast<double>(p), x);
    if (w == 0.0) continue;
    const auto ex = chi.value_exponent(static_cast<std::int64_t>(p));
    if (!ex) continue;
    const double u = chebyshev_u(n, angles.theta[i]);
    if (std::fabs(u) > ceiling) throw std::logic_error("harmonic_sum: |U_n| exceeds n+1");
    acc.add(chi.group().root(*ex) * (u * std::log(static_cast<double>(p)) * w));
    ++r.terms;
  }
  r.value = acc.value();
  r.main_term = (n == 0 && chi.is_trivial()) ? consts.Phi1 * x : 0.0;
  r.discrepancy = std::abs(r.value - r.main_term);
  r.bound_used = prop33_bound(static_cast<int>(n), x, 1, chi.conductor(), 12, consts);
  r.satisfied = r.discrepancy <= r.bound_used.value;
  return r;
}

// sum over prime powers p^m in the support of Lambda(p^m) phi_x(p^m), with
// Lambda(p^m) = U_n(cos m theta_p) chi(p^m) log p taken from the table via
// lambda_coefficient.
inline std::complex<double> prime_power_sum(unsigned n, const DirichletCharacter& chi, double x,
                                            const CoefficientTable& table) {
  detail::require_support(x, table.limit());
  const auto hi = static_cast<std::uint64_t>(std::floor(kSupportHi * x));
  const double lo = kSupportLo * x;
  CompensatedComplexSum acc;
  for (auto p : sieve_primes(2, hi)) {
    for (std::uint64_t j = p; j <= hi; j *= p) {
      if (static_cast<double>(j) > lo) {
        const double w = phi_x(static_cast<double>(j), x);
        if (w != 0.0) acc.add(lambda_coefficient(j, n, chi, table) * w);
      }
      if (j > hi / p) break;
    }
  }
  return acc.value();
}

// Same sum from precomputed angles, split as (primes, higher powers).
struct PrimePowerSplit {
  std::complex<double> primes;
  std::complex<double> higher;
  std::complex<double> total() const { return primes + higher; }
};

inline PrimePowerSplit prime_power_sum_direct(unsigned n, const DirichletCharacter& chi, double x,
                                              const PrimeAngles& angles) {
  detail::require_support(x, angles.limit);
  const double lo = kSupportLo * x, hi = kSupportHi * x;
  CompensatedComplexSum pr, hg;
  for (std::size_t i = 0; i < angles.primes.size() && angles.primes[i] <= hi; ++i) {
    const auto p = angles.primes[i];
    const double lp = std::log(static_cast<double>(p));
    unsigned m = 1;
    for (double j = static_cast<double>(p); j <= hi; j *= static_cast<double>(p), ++m) {
      if (j <= lo) continue;
      const double w = phi_x(j, x);
      if (w == 0.0) continue;
      std::int64_t jj = 1;
      for (unsigned t = 0; t < m; ++t) jj *= static_cast<std::int64_t>(p);
      const auto ex = chi.value_exponent(jj);
      if (!ex) continue;
      const auto term = chi.group().root(*ex) *
                        (chebyshev_u(n, reduce_angle(m * angles.theta[i])) * lp * w);
      (m == 1 ? pr : hg).add(term);
    }
  }
  return {pr.value(), hg.value()};
}

// Li(x) = int_lower^x dt / log t.
inline double log_integral(double x, double lower = 2.0) {
  if (!(x > 1.0 && lower > 1.0)) throw std::invalid_argument("log_integral: limits must exceed 1");
  if (x == lower) return 0.0;
  const double sgn = x > lower ? 1.0 : -1.0;
  const double a = std::min(x, lower), b = std::max(x, lower);
  // integrate in u = log t: int e^u / u du
  auto f = [](double u) { return std::exp(u) / u; };
  return sgn * integrate(f, std::log(a), std::log(b), 1e-10 * std::max(1.0, b / std::log(b))).value;
}

struct Census {
  double x = 0;
  Interval interval;
  std::uint64_t count = 0;
  std::uint64_t prime_count = 0;
  double mu = 0;
  double li = 0;
  double expected = 0;
  double discrepancy = 0;
  double fraction() const { return prime_count ? static_cast<double>(count) / prime_count : 0.0; }
};

inline Census sato_tate_census(double x, const Interval& I, const PrimeAngles& angles,
                               double li_lower = 2.0) {
  if (x > static_cast<double>(angles.limit)) throw std::out_of_range("census: x exceeds table");
  Census c;
  c.x = x;
  c.interval = I;
  const auto [b, e] = angles.range(0, x);
  for (std::size_t i = b; i < e; ++i) {
    ++c.prime_count;
    if (I.contains(angles.theta[i])) ++c.count;
  }
  c.mu = mu_st(I);
  c.li = log_integral(x, li_lower);
  c.expected = c.mu * c.li;
  c.discrepancy = std::fabs(static_cast<double>(c.count) - c.expected);
  return c;
}

inline double phi_integral(double tol = kDefaultQuadTol) {
  return integrate([](double t) { return phi(t); }, kSupportLo, kSupportHi, tol, {1.5}).value;
}

struct PrimeWeight {
  std::uint64_t p;
  double theta;
  double weight;  // log(p) phi_x(p)
};

// sum_{theta_p in I, p = a mod q} log(p) phi_x(p) - (x/phi(q)) mu_ST(I) int phi,
// measured against the main theorem's bound.
inline SumReport verify_theorem(double x, std::uint64_t q, std::uint64_t a, const Interval& I,
                                const PrimeAngles& angles, const PhiConstants& consts,
                                std::vector<PrimeWeight>* dump = nullptr) {
  if (q == 0) throw std::invalid_argument("verify_theorem: q must be positive");
  if (std::gcd(a % q, q) != 1 && q != 1) throw std::invalid_argument("verify_theorem: gcd(a, q) > 1");
  detail::require_support(x, angles.limit);
  const auto [b, e] = angles.range(kSupportLo * x, kSupportHi * x);
  CompensatedSum acc;
  SumReport r;
  for (std::size_t i = b; i < e; ++i) {
    const auto p = angles.primes[i];
    if (p % q != a % q) continue;
    if (!I.contains(angles.theta[i])) continue;
    const double w = std::log(static_cast<double>(p)) * phi_x(static_cast<double>(p), x);
    if (w == 0.0) continue;
    acc.add(w);
    ++r.terms;
    if (dump) dump->push_back({p, angles.theta[i], w});
  }
  r.value = acc.value();
  const double integral = phi_integral(consts.tol);
  r.main_term = x / static_cast<double>(arith::totient(q)) * mu_st(I) * integral;
  r.discrepancy = std::fabs(r.value.real() - r.main_term);
  r.bound_used = theorem_bound(x, q, 1, 12, consts);
  r.bound_used.extra("int_phi", integral);
  r.satisfied = r.discrepancy <= r.bound_used.value;
  return r;
}

// Left and right sides of the character expansion of the progression sum.
struct Orthogonality {
  double progression = 0;                // direct sum over p = a mod q, theta_p in I
  std::complex<double> decomposition;    // (1/phi(q)) sum_chi conj chi(a) sum_p 1_I chi(p) ...
  std::complex<double> primitive;        // same with each chi replaced by its primitive chi'
  double divisor_mass = 0;               // sum_{p | q} phi_x(p) log p
};

inline Orthogonality orthogonality_check(double x, std::uint64_t q, std::uint64_t a,
                                         const Interval& I, const PrimeAngles& angles) {
  detail::require_support(x, angles.limit);
  const auto [b, e] = angles.range(kSupportLo * x, kSupportHi * x);
  Orthogonality o;
  CompensatedSum direct;
  for (std::size_t i = b; i < e; ++i) {
    const auto p = angles.primes[i];
    if (p % q == a % q && I.contains(angles.theta[i])) {
      direct.add(std::log(static_cast<double>(p)) * phi_x(static_cast<double>(p), x));
    }
  }
  o.progression = direct.value();
  CompensatedComplexSum dec, prim;
  const auto chars = characters(q);
  for (const auto& chi : chars) {
    const auto chip = chi.primitive();
    CompensatedComplexSum s, sp;
    for (std::size_t i = b; i < e; ++i) {
      if (!I.contains(angles.theta[i])) continue;
      const auto p = static_cast<std::int64_t>(angles.primes[i]);
      const double w = std::log(static_cast<double>(p)) * phi_x(static_cast<double>(p), x);
      s.add(chi.value(p) * w);
      sp.add(chip.value(p) * w);
    }
    const auto ca = std::conj(chi.value(static_cast<std::int64_t>(a)));
    dec.add(ca * s.value());
    prim.add(ca * sp.value());
  }
  const double ph = static_cast<double>(chars.size());
  o.decomposition = dec.value() / ph;
  o.primitive = prim.value() / ph;
  for (auto [p, _] : arith::factorize(q)) {
    o.divisor_mass += phi_x(static_cast<double>(p), x) * std::log(static_cast<double>(p));
  }
  return o;
}

// psi(y) - theta(y) = sum_{p^m <= y, m >= 2} log p.
inline double psi_minus_theta(std::uint64_t y) {
  CompensatedSum s;
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(y))) + 1;
  for (auto p : sieve_primes(2, root)) {
    const double lp = std::log(static_cast<double>(p));
    for (std::uint64_t j = p * p; j <= y; j *= p) {
      s.add(lp);
      if (j > y / p) break;
    }
  }
  return s.value();
}

inline double rosser_schoenfeld_bound(double y) {
  return constants::kRosserSchoenfeldSqrt * std::sqrt(y) + constants::kRosserSchoenfeldCube * std::cbrt(y);
}

}  // namespace satotate
