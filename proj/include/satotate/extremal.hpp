#pragma once

// Majorants and minorants of interval indicators on [0, pi] as degree-M
// polynomials in the Chebyshev U basis.
//
// Construction: Vaaler's approximation V_M to the sawtooth psi(x) =
// x - floor(x) - 1/2 satisfies |psi - V_M| <= Delta_{M+1} / (2M + 2) with
// Delta the Fejer kernel, which gives Selberg's majorant/minorant of
// 1_{[alpha, beta]} on R/Z. Applying it to both arcs of the symmetric set
// {+-[a, b]} (period 2 pi) yields an even cosine polynomial
// sum d(m) cos(m theta), and 2 T_m = U_m - U_{m-2} moves it to the U basis.

#include "errors.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace satotate {

struct Interval {
  double a = 0;
  double b = std::numbers::pi;

  Interval() = default;
  Interval(double lo, double hi) : a(lo), b(hi) {
    if (!(0.0 <= a && a <= b && b <= std::numbers::pi)) {
      throw std::invalid_argument("Interval: require 0 <= a <= b <= pi");
    }
  }

  bool contains(double theta) const { return a <= theta && theta <= b; }
};

enum class Side { majorant, minorant };

inline const char* to_string(Side s) { return s == Side::majorant ? "majorant" : "minorant"; }

// Sato-Tate measure (2/pi) sin^2 on I.
inline double mu_st(const Interval& I) {
  return ((I.b - I.a) - 0.5 * (std::sin(2 * I.b) - std::sin(2 * I.a))) / std::numbers::pi;
}

// F(theta) = sum_{n=0}^{M} coeffs[n] U_n(cos theta).
struct ChebUExpansion {
  unsigned M = 0;
  Side side = Side::majorant;
  Interval interval;
  std::vector<double> coeffs;
};

// Clenshaw recurrence for the U basis; U_{-1} = 0 leaves b_0 as the sum.
inline double evaluate(const ChebUExpansion& e, double theta) {
  const double x2 = 2.0 * std::cos(theta);
  double b1 = 0, b2 = 0;
  for (std::size_t k = e.coeffs.size(); k-- > 0;) {
    const double b0 = e.coeffs[k] + x2 * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return b1;
}

inline double zeroth_coefficient_ceiling(unsigned M) { return 4.0 / (M + 1); }

inline double coefficient_ceiling(unsigned M, unsigned n) {
  return 4.0 / (M + 1) + 4.0 / (std::numbers::pi * n);
}

// Throws std::logic_error if |c(0) - mu_ST(I)| or any |c(n)| exceeds its
// ceiling.
inline void check_coefficient_bounds(const ChebUExpansion& e) {
  const double mu = mu_st(e.interval);
  if (std::fabs(e.coeffs[0] - mu) > zeroth_coefficient_ceiling(e.M)) {
    throw std::logic_error("extremal: zeroth coefficient bound violated");
  }
  for (unsigned n = 1; n <= e.M; ++n) {
    if (std::fabs(e.coeffs[n]) > coefficient_ceiling(e.M, n)) {
      throw std::logic_error("extremal: coefficient bound violated at n=" + std::to_string(n));
    }
  }
}

inline ChebUExpansion build_extremal(const Interval& I, unsigned M, Side side) {
  if (M < 1) throw std::invalid_argument("build_extremal: M must be >= 1");
  const double sgn = side == Side::majorant ? 1.0 : -1.0;
  const double N1 = M + 1.0;
  std::vector<double> d(M + 3, 0.0);  // cosine coefficients, d(M+1) = d(M+2) = 0
  d[0] = (I.b - I.a) / std::numbers::pi + sgn * 2.0 / N1;
  for (unsigned n = 1; n <= M; ++n) {
    const double u = n / N1;
    const double g = std::numbers::pi * u * (1 - u) / std::tan(std::numbers::pi * u) + u;
    const double v = -g / (std::numbers::pi * n);  // Vaaler sine coefficient
    d[n] = 2.0 * (v * (std::sin(n * I.a) - std::sin(n * I.b)) +
                  sgn * (1 - u) / N1 * (std::cos(n * I.a) + std::cos(n * I.b)));
  }
  ChebUExpansion e{M, side, I, std::vector<double>(M + 1)};
  e.coeffs[0] = d[0] - 0.5 * d[2];
  for (unsigned n = 1; n <= M; ++n) e.coeffs[n] = 0.5 * (d[n] - d[n + 2]);
  check_coefficient_bounds(e);
  return e;
}

struct CoefficientSums {
  double s0 = 0;  // sum_{n=1}^M |c(n)|
  double s1 = 0;  // sum n |c(n)|
  double s2 = 0;  // sum (n+1) |c(n)|
  double ceiling0 = 0;
  double ceiling1 = 0;
  double ceiling2 = 0;

  bool certified() const { return s0 <= ceiling0 && s1 <= ceiling1 && s2 <= ceiling2; }
};

// C = 32 (1/3 + 1/pi), so C M / 16 = 2 (1/3 + 1/pi) M.
inline double weighted_sum_constant() { return 32.0 * (1.0 / 3.0 + 1.0 / std::numbers::pi); }

inline CoefficientSums coefficient_sums(const ChebUExpansion& e) {
  if (e.M < 8) throw HypothesisError("coefficient_sums: requires M >= 8");
  CoefficientSums s;
  for (unsigned n = 1; n <= e.M && n < e.coeffs.size(); ++n) {
    const double c = std::fabs(e.coeffs[n]);
    s.s0 += c;
    s.s1 += n * c;
    s.s2 += (n + 1) * c;
  }
  const double logM = std::log(static_cast<double>(e.M));
  s.ceiling0 = 2.0 / std::numbers::pi * logM + 21.0 / 5.0;
  s.ceiling1 = weighted_sum_constant() * e.M / 16.0;
  s.ceiling2 = s.ceiling1 + 2.0 / std::numbers::pi * logM + std::numbers::pi;
  return s;
}

inline void write_csv(std::ostream& os, const ChebUExpansion& e) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g", e.interval.a, e.interval.b);
  os << "# interval=[" << buf << "] M=" << e.M << " side=" << to_string(e.side) << "\n";
  os << "n,coeff\n";
  for (std::size_t n = 0; n < e.coeffs.size(); ++n) {
    std::snprintf(buf, sizeof buf, "%.17g", e.coeffs[n]);
    os << n << "," << buf << "\n";
  }
}

}  // namespace satotate
