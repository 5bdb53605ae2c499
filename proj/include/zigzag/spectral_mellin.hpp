#pragma once

#include <string>

#include "zigzag/quadrature.hpp"

namespace zigzag {

struct SeriesValue {
  double value = 0.0;
  long terms_used = 0;
  double tail_bound = 0.0;  // rigorous bound on |true value - value|
};

// Sum_{m>=0} (m+1/2)^{-s} for integer s >= 2, via a direct partial sum plus a
// midpoint-rule integral tail correction.  The reported tail_bound dominates
// the correction's midpoint error (s/12) M^{-s-1} plus roundoff.
SeriesValue half_integer_zeta(int s, double rel_tol = 1e-12);

// Dirichlet beta: Sum_{k>=0} (-1)^k (2k+1)^{-s} for integer s >= 1.  Direct
// terms with early alternating-series stopping, falling back to a fixed
// 30-term iterated-averaging acceleration window for slowly converging s.
SeriesValue dirichlet_beta(int s, double rel_tol = 1e-12);

// (2n+1)! * (2/pi) * Sum_{m>=0} (m+1/2)^{-(2n+2)}, exactly as the claimed
// series states it.  The converged value is pi^{2n+1} * A_{2n+1}.
double spectral_series_literal(int n);

// (2n+1)! * (2/pi^{2n+2}) * Sum_{m>=0} (m+1/2)^{-(2n+2)}; the corrected
// constant, which matches A_{2n+1} to high relative accuracy.
double spectral_series_calibrated(int n);

struct MellinIdentityRecord {
  int s = 0;
  HyperKernel kernel = HyperKernel::cosh_kernel;
  double integral_value = 0.0;
  double series_value = 0.0;
  double rel_deviation = 0.0;
};

// Two-sided check of Integral_0^inf x^{s-1}/cosh x dx = 2 (s-1)! beta(s)
// for integer s in [1, 20].
MellinIdentityRecord mellin_identity_check(int s,
                                           const QuadratureConfig& cfg = {});

// Two-sided check of Integral_0^inf x^{s-1}/sinh x dx =
// (s-1)! 2^{1-s} Sum_{m>=0} (m+1/2)^{-s} for integer s in [2, 20].
MellinIdentityRecord mellin_identity_check_sinh(int s,
                                                const QuadratureConfig& cfg = {});

}  // namespace zigzag
