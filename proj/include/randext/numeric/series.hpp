#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

#include "randext/error.hpp"
#include "randext/numeric/tolerance.hpp"

namespace randext::numeric {

/// Partial sums of sum_{n >= first} term(n), stopped at the first n whose
/// tail_bound(n) (a bound on |sum_{m>n} term(m)|) is <= abs_tol.
///
/// Throws BudgetExceeded carrying S_n and tail_bound(n) when max_evals terms
/// have been added without the bound dropping below tolerance.
template <class Term, class TailBound>
double sum_series(const Term& term, const TailBound& tail_bound,
                  const Tolerance& tol = Tolerance::series(), std::uint64_t first = 1) {
  tol.validate();
  double sum = 0.0;
  double compensation = 0.0;
  double bound = 0.0;
  for (std::size_t i = 0; i < tol.max_evals; ++i) {
    const std::uint64_t n = first + i;
    // Kahan summation; long geometric tails otherwise lose the last digits.
    const double y = term(n) - compensation;
    const double t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
    bound = tail_bound(n);
    if (!std::isfinite(sum)) throw NonFiniteValue("sum_series: non-finite partial sum");
    if (bound <= tol.abs_tol) return sum;
  }
  throw BudgetExceeded("sum_series: tail bound above tolerance after max_evals terms", sum, bound);
}

}  // namespace randext::numeric
