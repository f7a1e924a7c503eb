#pragma once

// The bump phi(y) = exp(4/3 + 1/((y - 1/2)(y - 5/2))) on (1/2, 5/2), its
// derivatives, the constants
//   C_n = (2 pi)^{1-n} int |phi^(n)(e^{2 pi t}) e^{(2n+1) pi t}| dt
// and the Mellin transform Phi(s) = int phi(t) t^{s-1} dt.
//
// phi^(n) = R_n phi with R_n = P_n / g^{2n}, g = (y - 1/2)(y - 5/2):
//   P_1 = -g',  P_{n+1} = P_n' g^2 - 2n g g' P_n - g' P_n.

#include "errors.hpp"
#include "quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace satotate {

inline constexpr double kSupportLo = 0.5;
inline constexpr double kSupportHi = 2.5;
inline constexpr int kMaxPhiDerivative = 4;
inline constexpr double kDefaultQuadTol = 1e-10;

namespace detail {

using Poly = std::vector<double>;  // ascending powers of y

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline Poly poly_axpy(Poly a, const Poly& b, double scale) {
  if (a.size() < b.size()) a.resize(b.size(), 0.0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += scale * b[i];
  return a;
}

inline Poly poly_deriv(const Poly& a) {
  if (a.size() <= 1) return {0.0};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = static_cast<double>(i) * a[i];
  return r;
}

inline double poly_eval(const Poly& a, double y) {
  double r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = r * y + a[i];
  return r;
}

inline const std::array<Poly, kMaxPhiDerivative + 1>& derivative_numerators() {
  static const std::array<Poly, kMaxPhiDerivative + 1> table = [] {
    const Poly g = {1.25, -3.0, 1.0};
    const Poly dg = {-3.0, 2.0};
    const Poly g2 = poly_mul(g, g);
    const Poly ggp = poly_mul(g, dg);
    std::array<Poly, kMaxPhiDerivative + 1> P;
    P[0] = {1.0};
    P[1] = {3.0, -2.0};
    for (int n = 1; n < kMaxPhiDerivative; ++n) {
      Poly next = poly_mul(poly_deriv(P[n]), g2);
      next = poly_axpy(next, poly_mul(ggp, P[n]), -2.0 * n);
      next = poly_axpy(next, poly_mul(dg, P[n]), -1.0);
      P[n + 1] = next;
    }
    return P;
  }();
  return table;
}

inline double bump_g(double y) { return (y - 0.5) * (y - 2.5); }

}  // namespace detail

inline double phi(double y) {
  if (!(y > kSupportLo && y < kSupportHi)) return 0.0;
  return std::exp(4.0 / 3.0 + 1.0 / detail::bump_g(y));
}

// Exact n-th derivative, 0 <= n <= 4.
inline double phi_deriv(double y, int n) {
  if (n < 0 || n > kMaxPhiDerivative) {
    throw std::invalid_argument("phi_deriv: order " + std::to_string(n) + " unsupported");
  }
  if (!(y > kSupportLo && y < kSupportHi)) return 0.0;
  if (n == 0) return phi(y);
  const double g = detail::bump_g(y);
  const double p = detail::poly_eval(detail::derivative_numerators()[n], y);
  if (p == 0.0) return 0.0;
  // P_n g^{-2n} exp(4/3 + 1/g), combined in the exponent so that the
  // vanishing exponential wins near the support ends.
  const double mag = std::log(std::fabs(p)) - 2.0 * n * std::log(std::fabs(g)) + 4.0 / 3.0 + 1.0 / g;
  return std::copysign(std::exp(mag), p);
}

// Sign changes of phi^(n) inside the support, located by bisection.
inline std::vector<double> phi_deriv_zeros(int n) {
  std::vector<double> zeros;
  if (n <= 0) return zeros;
  const auto& P = detail::derivative_numerators()[n];
  constexpr int kGrid = 4000;
  const double h = (kSupportHi - kSupportLo) / kGrid;
  double prev_y = kSupportLo + h * 0.5;
  double prev = detail::poly_eval(P, prev_y);
  for (int i = 1; i < kGrid; ++i) {
    const double y = kSupportLo + h * (i + 0.5);
    const double v = detail::poly_eval(P, y);
    if ((prev < 0) != (v < 0)) {
      double lo = prev_y, hi = y;
      for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((detail::poly_eval(P, mid) < 0) == (prev < 0)) lo = mid; else hi = mid;
      }
      zeros.push_back(0.5 * (lo + hi));
    }
    prev = v;
    prev_y = y;
  }
  return zeros;
}

// C_n by adaptive quadrature in t over [log(1/2), log(5/2)] / (2 pi), split at
// the sign changes of phi^(n).
inline QuadResult c_n_detailed(int n, double tol = kDefaultQuadTol) {
  if (n < 0 || n > 2) throw std::invalid_argument("c_n: n must be 0, 1 or 2");
  if (!(tol > 0)) throw std::invalid_argument("c_n: tol must be positive");
  const double two_pi = 2.0 * std::numbers::pi;
  const double t_lo = std::log(kSupportLo) / two_pi;
  const double t_hi = std::log(kSupportHi) / two_pi;
  const double scale = std::pow(two_pi, 1.0 - n);
  auto integrand = [&](double t) {
    const double u = std::exp(two_pi * t);
    return std::fabs(phi_deriv(u, n)) * std::exp((2.0 * n + 1.0) * std::numbers::pi * t);
  };
  std::vector<double> breaks;
  for (double z : phi_deriv_zeros(n)) breaks.push_back(std::log(z) / two_pi);
  auto r = integrate(integrand, t_lo, t_hi, tol / scale, breaks);
  r.value *= scale;
  r.error *= scale;
  return r;
}

inline double c_n(int n, double tol = kDefaultQuadTol) { return c_n_detailed(n, tol).value; }

// Phi(s) x^s; scale = 1 gives Phi(s).
inline double mellin(double s, double tol = kDefaultQuadTol, double scale = 1.0) {
  if (!(s >= 0)) throw std::invalid_argument("mellin: s must be >= 0");
  auto f = [s](double t) { return phi(t) * std::pow(t, s - 1.0); };
  const double v = integrate(f, kSupportLo, kSupportHi, tol, {1.5}).value;
  return scale == 1.0 ? v : std::pow(scale, s) * v;
}

inline double phi_max() { return phi(1.5); }

struct PhiConstants {
  double C0 = 0;
  double C1 = 0;
  double C2 = 0;
  double Phi1 = 0;
  double Phi0 = 0;
  double PhiHalf = 0;
  double tol = kDefaultQuadTol;

  double sqrtC0C2() const { return std::sqrt(C0 * C2); }
  // sqrt(C0 C2) + 3 C0, the factor multiplying every logarithmic zero count
  double K() const { return sqrtC0C2() + 3.0 * C0; }

  static PhiConstants compute(double tol = kDefaultQuadTol) {
    PhiConstants c;
    c.tol = tol;
    c.C0 = c_n(0, tol);
    c.C1 = c_n(1, tol);
    c.C2 = c_n(2, tol);
    c.Phi1 = mellin(1.0, tol);
    c.Phi0 = mellin(0.0, tol);
    c.PhiHalf = mellin(0.5, tol);
    return c;
  }

  // Computed once at the default tolerance.
  static const PhiConstants& standard() {
    static const PhiConstants c = compute();
    return c;
  }
};

}  // namespace satotate
