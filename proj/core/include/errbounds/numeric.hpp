#pragma once

/// \file
/// Derivative-free scalar root finding and minimisation used by the bound
/// inversions and the brute-force oracles.

#include <cmath>
#include <concepts>

namespace errbounds::numeric {

inline constexpr double kRootTolerance = 1e-12;
inline constexpr int kMaxBisectionIterations = 200;

/// Solves f(x) = target for a nondecreasing f on [lo, hi] by bisection.
/// Returns the end of the final bracket on the side where f(x) >= target,
/// so the result never undershoots the preimage. Targets outside
/// [f(lo), f(hi)] return the nearer endpoint.
template <std::invocable<double> F>
double bisect_increasing(F&& f, double target, double lo, double hi,
                         double tolerance = kRootTolerance) {
  if (f(lo) >= target) return lo;
  if (f(hi) <= target) return hi;
  for (int i = 0; i < kMaxBisectionIterations && hi - lo > tolerance; ++i) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

struct Extremum {
  double x;
  double fx;
};

/// Golden-section minimisation of a unimodal f on [lo, hi] down to a
/// bracket of width `width`. The endpoints are evaluated too, so a minimum
/// sitting on the boundary is returned exactly.
template <std::invocable<double> F>
Extremum golden_section_minimize(F&& f, double lo, double hi, double width = 1e-10) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > width) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  Extremum best{0.5 * (a + b), f(0.5 * (a + b))};
  for (const double x : {lo, hi}) {
    const double fx = f(x);
    if (fx < best.fx) best = {x, fx};
  }
  return best;
}

}  // namespace errbounds::numeric
