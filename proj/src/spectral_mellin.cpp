#include "zigzag/spectral_mellin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "zigzag/errors.hpp"
#include "zigzag/exact_core.hpp"

namespace zigzag {

namespace {

constexpr double kPi = std::numbers::pi;

void kahan_add(double& sum, double& comp, double term) {
  const double y = term - comp;
  const double t = sum + y;
  comp = (t - sum) - y;
  sum = t;
}

double clamp_rel_tol(double rel_tol) {
  return std::clamp(rel_tol, 1e-15, 0.1);
}

double factorial_double(int n) {
  double v = 1.0;
  for (int k = 2; k <= n; ++k) v *= k;
  return v;
}

}  // namespace

SeriesValue half_integer_zeta(int s, double rel_tol) {
  if (s < 2) {
    throw ContractError("invalid-argument",
                        "half-integer zeta requires exponent >= 2");
  }
  rel_tol = clamp_rel_tol(rel_tol);
  double partial = 0.0;
  double comp = 0.0;
  long terms = 0;
  for (;;) {
    for (int i = 0; i < 64; ++i) {
      kahan_add(partial, comp, std::pow(terms + 0.5, -static_cast<double>(s)));
      ++terms;
    }
    // The remaining samples m + 1/2 (m >= terms) are midpoints of unit
    // intervals covering [terms, inf), so the tail is the integral
    // terms^{1-s}/(s-1) up to the midpoint-rule error (s/24) terms^{-s-1};
    // the reported bound doubles that and adds a roundoff allowance.
    const double m = static_cast<double>(terms);
    const double correction = std::pow(m, 1.0 - s) / (s - 1.0);
    const double value = partial + correction;
    const double bound = (s / 12.0) * std::pow(m, -static_cast<double>(s) - 1.0) +
                         4e-16 * std::abs(value);
    if (bound < rel_tol * std::abs(value) || terms >= 2000000) {
      return {value, terms, bound};
    }
  }
}

SeriesValue dirichlet_beta(int s, double rel_tol) {
  if (s < 1) {
    throw ContractError("invalid-argument",
                        "Dirichlet beta requires exponent >= 1");
  }
  rel_tol = clamp_rel_tol(rel_tol);
  constexpr int kDirect = 40;
  constexpr int kWindow = 30;

  double partial = 0.0;
  double comp = 0.0;
  for (int k = 0; k < kDirect; ++k) {
    double term = std::pow(2.0 * k + 1.0, -static_cast<double>(s));
    if (k % 2 == 1) term = -term;
    kahan_add(partial, comp, term);
    // Alternating-series remainder: the first omitted term bounds the tail.
    const double next = std::pow(2.0 * (k + 1) + 1.0, -static_cast<double>(s));
    if (next < rel_tol * std::abs(partial)) {
      return {partial, k + 1, next + 4e-16 * std::abs(partial)};
    }
  }

  // Iterated averaging of the next kWindow partial sums (Euler-transform
  // acceleration); each averaging pass halves the length-1 weight tail.
  std::vector<double> stage(static_cast<size_t>(kWindow) + 1);
  stage[0] = partial;
  for (int j = 1; j <= kWindow; ++j) {
    const int k = kDirect + j - 1;
    double term = std::pow(2.0 * k + 1.0, -static_cast<double>(s));
    if (k % 2 == 1) term = -term;
    stage[static_cast<size_t>(j)] = stage[static_cast<size_t>(j) - 1] + term;
  }
  double last_change = 0.0;
  while (stage.size() > 1) {
    last_change = std::abs(stage[1] - stage[0]) / 2.0;
    for (size_t i = 0; i + 1 < stage.size(); ++i) {
      stage[i] = 0.5 * (stage[i] + stage[i + 1]);
    }
    stage.pop_back();
  }
  const double value = stage[0];
  const double bound = 2.0 * last_change + 4e-16 * std::abs(value);
  return {value, kDirect + kWindow, bound};
}

double spectral_series_literal(int n) {
  if (n < 0 || n > 12) {
    throw ContractError("range-exceeded", "series index must be in [0, 12]");
  }
  const double fact = factorial_double(2 * n + 1);
  return fact * (2.0 / kPi) * half_integer_zeta(2 * n + 2, 1e-13).value;
}

double spectral_series_calibrated(int n) {
  if (n < 0 || n > 12) {
    throw ContractError("range-exceeded", "series index must be in [0, 12]");
  }
  const double fact = factorial_double(2 * n + 1);
  return fact * 2.0 / std::pow(kPi, 2 * n + 2) *
         half_integer_zeta(2 * n + 2, 1e-13).value;
}

MellinIdentityRecord mellin_identity_check(int s, const QuadratureConfig& cfg) {
  if (s < 1 || s > 20) {
    throw ContractError("range-exceeded", "identity check covers s in [1, 20]");
  }
  MellinIdentityRecord rec;
  rec.s = s;
  rec.kernel = HyperKernel::cosh_kernel;
  rec.integral_value = mellin_moment(s, HyperKernel::cosh_kernel, cfg).value;
  rec.series_value =
      2.0 * factorial_double(s - 1) * dirichlet_beta(s, 1e-13).value;
  rec.rel_deviation = std::abs(rec.integral_value - rec.series_value) /
                      std::max(std::abs(rec.series_value), 1e-300);
  return rec;
}

MellinIdentityRecord mellin_identity_check_sinh(int s,
                                                const QuadratureConfig& cfg) {
  if (s < 2 || s > 20) {
    throw ContractError("range-exceeded",
                        "sinh identity check covers s in [2, 20]");
  }
  MellinIdentityRecord rec;
  rec.s = s;
  rec.kernel = HyperKernel::sinh_kernel;
  rec.integral_value = mellin_moment(s, HyperKernel::sinh_kernel, cfg).value;
  rec.series_value = factorial_double(s - 1) * std::pow(2.0, 1 - s) *
                     half_integer_zeta(s, 1e-13).value;
  rec.rel_deviation = std::abs(rec.integral_value - rec.series_value) /
                      std::max(std::abs(rec.series_value), 1e-300);
  return rec;
}

}  // namespace zigzag
