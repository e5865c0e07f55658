#ifndef LERCH_QUADRATURE_HPP
#define LERCH_QUADRATURE_HPP

#include <cstddef>
#include <functional>

#include "lerch/numeric.hpp"

namespace lerch {

struct QuadratureResult {
  Complex value;
  std::size_t intervals_used = 0;
  double error_estimate = 0.0;
};

struct QuadratureOptions {
  double abs_tol = 1e-14;
  double rel_tol = 1e-13;
  std::size_t max_intervals = 4000;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of a complex-valued
/// integrand over [lo, hi]. The interval with the largest |K15 - G7| is
/// bisected until the summed estimate meets max(abs_tol, rel_tol*|I|) or
/// every remaining estimate is at rounding level.
///
/// Throws NonConvergence when max_intervals is exhausted first.
QuadratureResult integrate(const std::function<Complex(double)>& f, double lo, double hi,
                           const QuadratureOptions& options = {});

}  // namespace lerch

#endif
