#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature: the interval with the
// largest error estimate is bisected until the summed estimate meets the
// absolute tolerance.

#include "errors.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace satotate {

struct QuadResult {
  double value = 0;
  double error = 0;
  std::size_t intervals = 0;
};

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = f(c);
  double k = fc * kKronrodWeights[7];
  double g = fc * kGaussWeights[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kKronrodNodes[i];
    const double s = f(c - dx) + f(c + dx);
    k += kKronrodWeights[i] * s;
    if (i % 2 == 1) g += kGaussWeights[i / 2] * s;
  }
  return {a, b, k * h, std::fabs((k - g) * h)};
}

}  // namespace detail

// Integrates f over [a, b], splitting first at the given interior points.
template <class F>
QuadResult integrate(const F& f, double a, double b, double abs_tol,
                     const std::vector<double>& breakpoints = {},
                     std::size_t max_intervals = 20000) {
  std::priority_queue<detail::Panel> heap;
  double lo = a;
  for (double bp : breakpoints) {
    if (bp > lo && bp < b) {
      heap.push(detail::gk15(f, lo, bp));
      lo = bp;
    }
  }
  heap.push(detail::gk15(f, lo, b));
  auto summed = [&heap] {
    QuadResult r;
    auto copy = heap;
    while (!copy.empty()) {
      r.value += copy.top().value;
      r.error += copy.top().error;
      copy.pop();
    }
    r.intervals = heap.size();
    return r;
  };
  double running_err = summed().error;
  while (true) {
    if (running_err <= abs_tol) {
      auto r = summed();
      if (r.error <= abs_tol) return r;
      running_err = r.error;
    }
    if (heap.size() >= max_intervals) {
      throw QuadratureError("integrate: subdivision limit reached", summed().error);
    }
    const auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw QuadratureError("integrate: interval collapsed", summed().error);
    }
    const auto left = detail::gk15(f, worst.a, mid);
    const auto right = detail::gk15(f, mid, worst.b);
    running_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
}

}  // namespace satotate
