#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zigzag/numeric.hpp"

namespace zigzag {

enum class Parity { even, odd };
enum class HyperKernel { sinh_kernel, cosh_kernel };

std::string to_string(Parity p);
std::string to_string(HyperKernel k);
Parity parity_from_string(const std::string& s);
HyperKernel kernel_from_string(const std::string& s);

struct QuadratureConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-300;
  int max_depth = 40;
  enum class Truncation { tail_bound, fixed_cutoff };
  Truncation truncation = Truncation::tail_bound;
  double fixed_cutoff = 200.0;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  double cutoff = 0.0;
  bool converged = true;
};

// Adaptive composite 15-point Gauss-Legendre on [0, U] where U is chosen so
// that the tail of a u^growth_order * exp(-u) envelope is negligible at the
// requested relative tolerance (truncation = tail_bound), or U =
// cfg.fixed_cutoff.  The integrand must be continuous on (0, inf) and decay
// at least as fast as that envelope.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         int growth_order,
                                         const QuadratureConfig& cfg = {});

// Same adaptive panel scheme on a finite interval [a, b].
QuadratureResult integrate_finite(const std::function<double(double)>& f,
                                  double a, double b,
                                  const QuadratureConfig& cfg = {});

// (1/pi) * Integral_0^inf y^{2n+1} / sinh(y/2) dy, evaluated as written.
// Internally substitutes y = 2u so the integrand decays like exp(-u).
// The converged value is pi^{2n+1} * A_{2n+1}, not A_{2n+1}; callers compare.
QuadratureResult hyper_sinh_literal(int n, const QuadratureConfig& cfg = {});

// The uncorrected normalizations:
//   even: (4/pi^{2n+1}) * Integral x^{2n}   / cosh x dx   (vs A_{2n})
//   odd:  (4/pi^{2n+2}) * Integral x^{2n+1} / sinh x dx   (vs A_{2n+1})
QuadratureResult hyper_classical(int n, Parity parity,
                                 const QuadratureConfig& cfg = {});

// Corrected normalizations, validated against the exact tables:
//   even: (2^{2n+1}/pi^{2n+1}) * Integral u^{2n}   / cosh u du = A_{2n}
//   odd:  (2^{2n+2}/pi^{2n+2}) * Integral u^{2n+1} / sinh u du = A_{2n+1}
QuadratureResult hyper_calibrated(int n, Parity parity,
                                  const QuadratureConfig& cfg = {});

// Trapezoidal evaluation of the circle contour integral that extracts the
// degree-n Taylor coefficient of the geometric-sum kernel
//   h(z) = (1 - (-(e^z - 1)/2)^{n+1}) / (e^z + 1),
// scaled by 2^{n+1} n!.  h is entire (the e^z = -1 zeros of the denominator
// cancel), so the rule converges super-geometrically; the limit equals the
// alternating Stirling sum for index n, not A_n.  Requires 0 < radius < pi
// and nodes >= 8.
QuadratureResult contour_trapezoid(int n, double radius, int nodes);

// Integral_0^inf x^{s-1} / kernel(x) dx for integer 1 <= s <= 25.
// (sinh, s=1) diverges at the origin and is rejected.
QuadratureResult mellin_moment(int s, HyperKernel kernel,
                               const QuadratureConfig& cfg = {});

struct FourierScanPoint {
  double epsilon = 0.0;
  double value = 0.0;
};

struct FourierScanRecord {
  int n = 0;
  std::vector<FourierScanPoint> points;
  std::vector<double> increment_ratios;
  // "convergent", "divergent", or "indeterminate".
  std::string classification;
  // "logarithmic" when divergent increments stay constant under
  // epsilon-halving; empty otherwise.
  std::string growth_law;
  double extrapolated = 0.0;  // meaningful only when convergent
  double final_ratio = 0.0;
};

std::vector<double> default_fourier_epsilons();

// Evaluates (2 n! / pi) * Integral_0^{pi/2 - eps} (sec x + tan x) sin((n+1)x) dx
// for each cutoff eps and classifies the eps -> 0 behavior from the increment
// ratios: near the endpoint the integrand behaves like
// 2 sin((n+1)pi/2) / (pi/2 - x), so divergence is expected exactly when
// sin((n+1)pi/2) != 0.
FourierScanRecord fourier_cutoff_scan(int n, const std::vector<double>& epsilons,
                                      const QuadratureConfig& cfg = {});

}  // namespace zigzag
