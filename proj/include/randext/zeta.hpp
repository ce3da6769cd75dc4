#pragma once

#include <array>
#include <cmath>

#include "randext/error.hpp"

namespace randext {

/// Riemann zeta for real k > 1: the first 15 terms summed directly, the
/// remainder from the integral tail plus Euler-Maclaurin corrections.
/// Accurate to a few ulps for moderate k.
inline double riemann_zeta(double k) {
  if (!(k > 1.0) || !std::isfinite(k)) throw ParameterError("riemann_zeta: requires finite k > 1");
  constexpr int cutoff = 16;
  // B_{2j} / (2j)!
  constexpr std::array<double, 7> bernoulli_over_factorial = {
      1.0 / 12.0,           -1.0 / 720.0,          1.0 / 30240.0,          -1.0 / 1209600.0,
      1.0 / 47900160.0,     -691.0 / 1307674368000.0, 1.0 / 74724249600.0};
  double sum = 0.0;
  for (int n = cutoff - 1; n >= 1; --n) sum += std::pow(static_cast<double>(n), -k);
  const double N = cutoff;
  double tail = std::pow(N, 1.0 - k) / (k - 1.0) + 0.5 * std::pow(N, -k);
  // rising factorial k (k+1) ... (k+2j-2) times N^{-k-2j+1}
  double rising = k;
  double power = std::pow(N, -k - 1.0);
  for (std::size_t j = 0; j < bernoulli_over_factorial.size(); ++j) {
    tail += bernoulli_over_factorial[j] * rising * power;
    rising *= (k + 2.0 * j + 1.0) * (k + 2.0 * j + 2.0);
    power /= N * N;
  }
  return sum + tail;
}

}  // namespace randext
