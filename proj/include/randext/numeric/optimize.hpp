#pragma once

#include <cmath>
#include <cstddef>

#include "randext/error.hpp"
#include "randext/numeric/tolerance.hpp"

namespace randext::numeric {

struct Maximum {
  double argmax;
  double value;
  std::size_t evals;
};

/// Maximizes f on [lo, hi]: a fixed scan of grid_points equally spaced points
/// (endpoints included, ties to the smaller x), then golden-section refinement
/// on the bracket around the best grid point. Monotone f ends at a boundary.
template <class F>
Maximum maximize_1d(const F& f, double lo, double hi,
                    const Tolerance& tol = Tolerance::optimizer(), std::size_t grid_points = 256) {
  tol.validate();
  if (!(lo < hi)) throw DomainError("maximize_1d: requires lo < hi");
  if (grid_points < 3) throw ParameterError("maximize_1d: need at least 3 grid points");

  std::size_t evals = 0;
  auto eval = [&](double x) {
    const double v = f(x);
    ++evals;
    if (!std::isfinite(v)) throw NonFiniteValue("maximize_1d: objective is not finite");
    return v;
  };

  const double step = (hi - lo) / static_cast<double>(grid_points - 1);
  auto grid_x = [&](std::size_t i) { return i + 1 == grid_points ? hi : lo + step * static_cast<double>(i); };

  std::size_t best_i = 0;
  double best_v = eval(lo);
  for (std::size_t i = 1; i < grid_points; ++i) {
    const double v = eval(grid_x(i));
    if (v > best_v) {
      best_v = v;
      best_i = i;
    }
  }

  double a = grid_x(best_i == 0 ? 0 : best_i - 1);
  double b = grid_x(best_i + 1 == grid_points ? best_i : best_i + 1);
  Maximum best{grid_x(best_i), best_v, 0};

  constexpr double inv_phi = 0.6180339887498948482;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  while (b - a > tol.abs_tol && evals < tol.max_evals) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = eval(d);
    }
  }
  const double x_ref = fc >= fd ? c : d;
  const double v_ref = fc >= fd ? fc : fd;
  if (v_ref > best.value) {
    best.argmax = x_ref;
    best.value = v_ref;
  }
  // The bracket end may beat the interior points when the maximum sits on a boundary.
  for (double edge : {a, b}) {
    const double v = eval(edge);
    if (v > best.value) {
      best.argmax = edge;
      best.value = v;
    }
  }
  best.evals = evals;
  return best;
}

/// Root of a monotone function on [lo, hi] by bisection; g(lo) and g(hi) must
/// bracket zero. Stops when the bracket is <= abs_tol or cannot shrink further.
template <class G>
double bisect_root(const G& g, double lo, double hi, double abs_tol = 1e-15, std::size_t max_iter = 400) {
  double g_lo = g(lo);
  const double g_hi = g(hi);
  if (g_lo == 0.0) return lo;
  if (g_hi == 0.0) return hi;
  if ((g_lo > 0.0) == (g_hi > 0.0)) throw DomainError("bisect_root: endpoints do not bracket a root");
  for (std::size_t i = 0; i < max_iter && hi - lo > abs_tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    const double g_mid = g(mid);
    if (g_mid == 0.0) return mid;
    if ((g_mid > 0.0) == (g_lo > 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace randext::numeric
