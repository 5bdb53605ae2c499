#include "zigzag/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "zigzag/errors.hpp"

namespace zigzag {

namespace {

constexpr double kPi = std::numbers::pi;

struct Gauss15 {
  std::array<double, 15> nodes{};
  std::array<double, 15> weights{};
};

// Nodes and weights of 15-point Gauss-Legendre on [-1, 1], found by Newton
// iteration on P_15 with the three-term recurrence supplying P and P'.
const Gauss15& gauss15() {
  static const Gauss15 rule = [] {
    Gauss15 r{};
    constexpr int N = 15;
    for (int i = 0; i < N; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (N + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 64; ++iter) {
        double p0 = 1.0;
        double p1 = x;
        for (int j = 2; j <= N; ++j) {
          double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
          p0 = p1;
          p1 = p2;
        }
        dp = N * (x * p1 - p0) / (x * x - 1.0);
        double step = p1 / dp;
        x -= step;
        if (std::abs(step) < 1e-15) {
          p0 = 1.0;
          p1 = x;
          for (int j = 2; j <= N; ++j) {
            double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
          }
          dp = N * (x * p1 - p0) / (x * x - 1.0);
          break;
        }
      }
      r.nodes[i] = x;
      r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
  }();
  return rule;
}

double gauss15_panel(const std::function<double(double)>& f, double a, double b,
                     long& evaluations) {
  const Gauss15& r = gauss15();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < 15; ++i) sum += r.weights[i] * f(mid + half * r.nodes[i]);
  evaluations += 15;
  return sum * half;
}

struct AdaptiveState {
  const std::function<double(double)>& f;
  double tol_per_length;
  int max_depth;
  long evaluations = 0;
  double error_sum = 0.0;
  bool converged = true;
};

// Bisect until the two-level Gauss estimates agree to the length-prorated
// tolerance; panels are accumulated strictly left to right so totals are
// deterministic.
double adaptive_panel(AdaptiveState& st, double a, double b, double whole,
                      int depth) {
  const double mid = 0.5 * (a + b);
  const double left = gauss15_panel(st.f, a, mid, st.evaluations);
  const double right = gauss15_panel(st.f, mid, b, st.evaluations);
  const double diff = std::abs(whole - (left + right));
  const double tol_local = st.tol_per_length * (b - a);
  if (diff <= tol_local || depth >= st.max_depth) {
    if (diff > tol_local) st.converged = false;
    st.error_sum += diff;
    return left + right;
  }
  return adaptive_panel(st, a, mid, left, depth + 1) +
         adaptive_panel(st, mid, b, right, depth + 1);
}

QuadratureResult integrate_interval(const std::function<double(double)>& f,
                                    double a, double b,
                                    const QuadratureConfig& cfg,
                                    double rough_scale, long prior_evals) {
  AdaptiveState st{f,
                   std::max(cfg.abs_tol, cfg.rel_tol * rough_scale) /
                       std::max(b - a, 1e-300),
                   cfg.max_depth};
  st.evaluations = prior_evals;

  // Initial panels no wider than 10 so concentrated kernels are never missed
  // by a single wide panel.
  const int panel_count = std::max(1, static_cast<int>(std::ceil((b - a) / 10.0)));
  const double width = (b - a) / panel_count;
  double total = 0.0;
  for (int i = 0; i < panel_count; ++i) {
    const double pa = a + width * i;
    const double pb = (i + 1 == panel_count) ? b : pa + width;
    const double whole = gauss15_panel(f, pa, pb, st.evaluations);
    total += adaptive_panel(st, pa, pb, whole, 0);
  }

  QuadratureResult res;
  res.value = total;
  res.error_estimate = st.error_sum;
  res.evaluations = st.evaluations;
  res.cutoff = b;
  res.converged = st.converged;
  return res;
}

// u^m / sinh u with the series limit substituted near the removable point.
double sinh_moment_integrand(double u, int m) {
  if (u < 1e-8) return std::pow(u, m - 1) * (1.0 - u * u / 6.0);
  return std::pow(u, m) / std::sinh(u);
}

double cosh_moment_integrand(double u, int m) {
  return std::pow(u, m) / std::cosh(u);
}

double factorial_double(int n) {
  double v = 1.0;
  for (int k = 2; k <= n; ++k) v *= k;
  return v;
}

}  // namespace

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

std::string to_string(HyperKernel k) {
  return k == HyperKernel::sinh_kernel ? "sinh" : "cosh";
}

Parity parity_from_string(const std::string& s) {
  if (s == "even") return Parity::even;
  if (s == "odd") return Parity::odd;
  throw ContractError("invalid-argument", "parity must be 'even' or 'odd', got '" + s + "'");
}

HyperKernel kernel_from_string(const std::string& s) {
  if (s == "sinh") return HyperKernel::sinh_kernel;
  if (s == "cosh") return HyperKernel::cosh_kernel;
  throw ContractError("invalid-argument", "kernel must be 'sinh' or 'cosh', got '" + s + "'");
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         int growth_order,
                                         const QuadratureConfig& cfg) {
  if (growth_order < 0) {
    throw ContractError("invalid-argument", "growth order must be nonnegative");
  }
  long evals = 0;
  double cutoff;
  double rough;
  if (cfg.truncation == QuadratureConfig::Truncation::fixed_cutoff) {
    cutoff = cfg.fixed_cutoff;
    rough = 0.0;
    const int rough_panels = std::max(1, static_cast<int>(std::ceil(cutoff / 10.0)));
    for (int i = 0; i < rough_panels; ++i) {
      rough += gauss15_panel(f, cutoff * i / rough_panels,
                             cutoff * (i + 1) / rough_panels, evals);
    }
  } else {
    // Coarse single-level pass to get the magnitude that the truncation test
    // is relative to.
    const double rough_end =
        std::min(200.0, std::max(40.0, 4.0 * growth_order + 8.0));
    rough = 0.0;
    const int rough_panels = static_cast<int>(std::ceil(rough_end / 10.0));
    for (int i = 0; i < rough_panels; ++i) {
      rough += gauss15_panel(f, rough_end * i / rough_panels,
                             rough_end * (i + 1) / rough_panels, evals);
    }
    // March the integer cutoff U until the decay envelope u^k e^{-u/2} is
    // negligible; the extra e^{-u/2} left in reserve makes the true
    // incomplete-gamma tail smaller than this test by many orders.
    const double scale = cfg.rel_tol * std::max(std::abs(rough), 1e-300);
    cutoff = 200.0;
    for (double u = std::max(2.0 * growth_order, 1.0); u <= 200.0; u += 1.0) {
      const double envelope =
          std::exp(growth_order * std::log(u) - 0.5 * u);
      if (envelope < scale) {
        cutoff = u;
        break;
      }
    }
  }

  QuadratureResult res =
      integrate_interval(f, 0.0, cutoff, cfg, std::abs(rough), evals);
  // 2 * Integral_U^inf u^k e^{-u} du <= 4 U^k e^{-U} once U >= 2k.
  const double log_tail =
      growth_order * std::log(std::max(cutoff, 1.0)) - cutoff;
  res.error_estimate += 4.0 * std::exp(log_tail);
  return res;
}

QuadratureResult integrate_finite(const std::function<double(double)>& f,
                                  double a, double b,
                                  const QuadratureConfig& cfg) {
  if (!(a < b)) {
    throw ContractError("invalid-argument", "integration bounds must satisfy a < b");
  }
  long evals = 0;
  double rough = 0.0;
  for (int i = 0; i < 8; ++i) {
    rough += gauss15_panel(f, a + (b - a) * i / 8.0, a + (b - a) * (i + 1) / 8.0,
                           evals);
  }
  return integrate_interval(f, a, b, cfg, std::abs(rough), evals);
}

QuadratureResult hyper_sinh_literal(int n, const QuadratureConfig& cfg) {
  if (n < 0 || n > 12) {
    throw ContractError("range-exceeded",
                        "half-argument moment index must be in [0, 12]");
  }
  const int m = 2 * n + 1;
  QuadratureResult res = integrate_semi_infinite(
      [m](double u) { return sinh_moment_integrand(u, m); }, m, cfg);
  const double scale = std::pow(2.0, 2 * n + 2) / kPi;
  res.value *= scale;
  res.error_estimate *= scale;
  return res;
}

QuadratureResult hyper_classical(int n, Parity parity,
                                 const QuadratureConfig& cfg) {
  if (parity == Parity::even) {
    if (n < 0 || n > 10) {
      throw ContractError("range-exceeded",
                          "even moment index must be in [0, 10] (A_{2n} <= ~1e15)");
    }
    const int m = 2 * n;
    QuadratureResult res = integrate_semi_infinite(
        [m](double u) { return cosh_moment_integrand(u, m); }, m, cfg);
    const double scale = 4.0 / std::pow(kPi, 2 * n + 1);
    res.value *= scale;
    res.error_estimate *= scale;
    return res;
  }
  if (n < 0 || n > 9) {
    throw ContractError("range-exceeded",
                        "odd moment index must be in [0, 9] (A_{2n+1} <= ~1e15)");
  }
  const int m = 2 * n + 1;
  QuadratureResult res = integrate_semi_infinite(
      [m](double u) { return sinh_moment_integrand(u, m); }, m, cfg);
  const double scale = 4.0 / std::pow(kPi, 2 * n + 2);
  res.value *= scale;
  res.error_estimate *= scale;
  return res;
}

QuadratureResult hyper_calibrated(int n, Parity parity,
                                  const QuadratureConfig& cfg) {
  QuadratureResult res = hyper_classical(n, parity, cfg);
  // The corrected constants replace the flat factor 4: even 2^{2n+1},
  // odd 2^{2n+2}.
  const double correction =
      std::pow(2.0, parity == Parity::even ? 2 * n + 1 : 2 * n + 2) / 4.0;
  res.value *= correction;
  res.error_estimate *= correction;
  return res;
}

QuadratureResult contour_trapezoid(int n, double radius, int nodes) {
  if (n < 0 || n > 100) {
    throw ContractError("range-exceeded", "contour index must be in [0, 100]");
  }
  if (!(radius > 0.0)) {
    throw ContractError("invalid-argument", "contour radius must be positive");
  }
  if (radius >= kPi) {
    throw ContractError("divergent-parameters",
                        "contour radius must stay below pi to exclude the kernel poles");
  }
  if (nodes < 8) {
    throw ContractError("invalid-argument", "contour rule needs at least 8 nodes");
  }

  const auto kernel = [n](std::complex<double> z) {
    const std::complex<double> ez = std::exp(z);
    const std::complex<double> w = -(ez - 1.0) / 2.0;
    std::complex<double> wpow = 1.0;
    for (int i = 0; i <= n; ++i) wpow *= w;
    return (1.0 - wpow) / (ez + 1.0);
  };

  long evals = 0;
  const auto rule_value = [&](int m) {
    // Conjugate symmetry: sample theta in [0, pi] only and double the
    // interior terms.
    const auto sample = [&](double theta) {
      const std::complex<double> z = std::polar(radius, theta);
      const std::complex<double> phase =
          std::polar(1.0, -static_cast<double>(n) * theta);
      ++evals;
      return (kernel(z) * phase).real();
    };
    double sum = sample(0.0) + sample(kPi);
    for (int j = 1; j < m / 2; ++j) sum += 2.0 * sample(2.0 * kPi * j / m);
    return factorial_double(n) * std::pow(2.0, n + 1) * sum /
           (m * std::pow(radius, n));
  };

  int m = nodes + (nodes % 2);
  int m_half = std::max(8, m / 2);
  m_half += m_half % 2;
  const double coarse = rule_value(m_half);
  const double fine = rule_value(m);

  QuadratureResult res;
  res.value = fine;
  res.error_estimate = std::abs(fine - coarse);
  res.evaluations = evals;
  res.cutoff = radius;
  res.converged = true;
  return res;
}

QuadratureResult mellin_moment(int s, HyperKernel kernel,
                               const QuadratureConfig& cfg) {
  if (s < 1 || s > 25) {
    throw ContractError("range-exceeded", "moment order must be in [1, 25]");
  }
  if (kernel == HyperKernel::sinh_kernel && s == 1) {
    throw ContractError("divergent-integral",
                        "Integral of 1/sinh diverges logarithmically at 0");
  }
  const int m = s - 1;
  if (kernel == HyperKernel::sinh_kernel) {
    return integrate_semi_infinite(
        [m](double u) { return sinh_moment_integrand(u, m); }, m, cfg);
  }
  return integrate_semi_infinite(
      [m](double u) { return cosh_moment_integrand(u, m); }, m, cfg);
}

std::vector<double> default_fourier_epsilons() {
  std::vector<double> eps;
  for (int j = 0; j <= 10; ++j) eps.push_back(0.1 * std::pow(2.0, -j));
  return eps;
}

FourierScanRecord fourier_cutoff_scan(int n, const std::vector<double>& epsilons,
                                      const QuadratureConfig& cfg) {
  if (n < 0 || n > 100) {
    throw ContractError("range-exceeded", "scan index must be in [0, 100]");
  }
  if (epsilons.size() < 3) {
    throw ContractError("invalid-argument",
                        "cutoff scan needs at least 3 epsilon values");
  }
  for (size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > 0.0) || !(epsilons[i] < kPi / 2.0)) {
      throw ContractError("invalid-argument",
                          "epsilons must lie strictly inside (0, pi/2)");
    }
    if (i > 0 && !(epsilons[i] < epsilons[i - 1])) {
      throw ContractError("invalid-argument",
                          "epsilons must be strictly decreasing");
    }
  }

  const double scale = 2.0 * factorial_double(n) / kPi;
  const auto integrand = [n](double x) {
    return (1.0 + std::sin(x)) / std::cos(x) *
           std::sin((n + 1.0) * x);
  };

  FourierScanRecord rec;
  rec.n = n;
  for (double eps : epsilons) {
    QuadratureResult q = integrate_finite(integrand, 0.0, kPi / 2.0 - eps, cfg);
    rec.points.push_back({eps, scale * q.value});
  }

  // Increment ratios diagnose the eps -> 0 behavior under halving: constant
  // increments (ratio -> 1) mean logarithmic growth; geometric decay means a
  // finite limit reachable by geometric extrapolation.
  std::vector<double> increments;
  for (size_t i = 1; i < rec.points.size(); ++i) {
    increments.push_back(rec.points[i].value - rec.points[i - 1].value);
  }
  const double value_scale = std::abs(rec.points.back().value) + 1.0;
  for (size_t i = 1; i < increments.size(); ++i) {
    if (std::abs(increments[i - 1]) < 1e-14 * value_scale) break;
    rec.increment_ratios.push_back(increments[i] / increments[i - 1]);
  }

  if (std::abs(increments.back()) < 1e-12 * value_scale) {
    rec.classification = "convergent";
    rec.extrapolated = rec.points.back().value;
    rec.final_ratio = 0.0;
    return rec;
  }

  const double ratio = rec.increment_ratios.empty()
                           ? 0.0
                           : rec.increment_ratios.back();
  rec.final_ratio = ratio;
  if (std::abs(ratio - 1.0) <= 0.1) {
    rec.classification = "divergent";
    rec.growth_law = "logarithmic";
  } else if (ratio > 1.1) {
    rec.classification = "divergent";
    rec.growth_law = "super-logarithmic";
  } else if (ratio != 0.0 && std::abs(ratio) <= 0.65) {
    rec.classification = "convergent";
    rec.extrapolated =
        rec.points.back().value + increments.back() * ratio / (1.0 - ratio);
  } else {
    rec.classification = "indeterminate";
  }
  return rec;
}

}  // namespace zigzag
