#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

#include "randext/error.hpp"
#include "randext/numeric/tolerance.hpp"

namespace randext::numeric {

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1,1] (QUADPACK qk15).
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
// Gauss weights for the odd Kronrod nodes 1, 3, 5 and the centre.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

/// One Gauss-Kronrod panel on [lo, hi] of the function g. Nodes are strictly interior.
template <class G>
Panel gauss_kronrod_15(const G& g, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = g(centre);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  double abs_sum = std::abs(kronrod);
  std::array<double, 7> f1{}, f2{};
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    f1[j] = g(centre - dx);
    f2[j] = g(centre + dx);
    kronrod += kKronrodWeights[j] * (f1[j] + f2[j]);
    abs_sum += kKronrodWeights[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * (f1[j] + f2[j]);
  }
  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[7] * std::abs(fc - mean);
  for (std::size_t j = 0; j < 7; ++j)
    asc += kKronrodWeights[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

  double err = std::abs((kronrod - gauss) * half);
  const double asc_scaled = asc * std::abs(half);
  if (asc_scaled != 0.0 && err != 0.0)
    err = asc_scaled * std::min(1.0, std::pow(200.0 * err / asc_scaled, 1.5));
  const double abs_scaled = abs_sum * std::abs(half);
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (abs_scaled > std::numeric_limits<double>::min() / (50.0 * eps))
    err = std::max(50.0 * eps * abs_scaled, err);
  return {lo, hi, kronrod * half, err};
}

}  // namespace detail

/// Adaptive integral of f over [a, b].
///
/// Integrates in the variable t on [0,1] with x = a + (b-a) t^2 (3-2t), which
/// flattens x^(-1/2)-type endpoint singularities (arcsine, Topp-Leone a<1).
/// Panels are Gauss-Kronrod 7/15, refined globally by largest error until
/// error <= max(abs_tol, rel_tol |I|). f is never evaluated at a or b.
/// Throws BudgetExceeded (with the current estimate) once max_evals is spent.
template <class F>
double integrate(const F& f, double a, double b, const Tolerance& tol = Tolerance::quadrature()) {
  tol.validate();
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) throw DomainError("integrate: requires finite a < b");

  const double width = b - a;
  std::size_t evals = 0;
  auto g = [&](double t) -> double {
    const double x = a + width * (t * t * (3.0 - 2.0 * t));
    if (!(x > a && x < b)) return 0.0;
    ++evals;
    return f(x) * width * 6.0 * t * (1.0 - t);
  };

  std::priority_queue<detail::Panel> panels;
  panels.push(detail::gauss_kronrod_15(g, 0.0, 1.0));
  double total = panels.top().value;
  double total_err = panels.top().error;

  while (total_err > std::max(tol.abs_tol, tol.rel_tol * std::abs(total))) {
    if (!std::isfinite(total)) throw NonFiniteValue("integrate: integrand produced a non-finite value");
    if (evals + 30 > tol.max_evals)
      throw BudgetExceeded("integrate: evaluation budget exhausted", total, total_err);
    const detail::Panel worst = panels.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi))
      throw BudgetExceeded("integrate: panel cannot be subdivided further", total, total_err);
    panels.pop();
    const detail::Panel left = detail::gauss_kronrod_15(g, worst.lo, mid);
    const detail::Panel right = detail::gauss_kronrod_15(g, mid, worst.hi);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum to drop accumulated update roundoff.
  double sum = 0.0;
  while (!panels.empty()) {
    sum += panels.top().value;
    panels.pop();
  }
  if (!std::isfinite(sum)) throw NonFiniteValue("integrate: integrand produced a non-finite value");
  return sum;
}

}  // namespace randext::numeric
