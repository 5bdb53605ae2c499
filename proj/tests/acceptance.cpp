// Acceptance harness: runs every acceptance criterion and prints exactly one
// PASS/FAIL line per criterion, then a summary.  Exit code = number of failed
// criteria.
//
// Two failures are expected by analysis and are not implementation defects:
//   - criterion 3 requires the falling-factorial coefficient identity to hold
//     at n = 1, but under the (-1)^k sign convention pinned by the companion
//     examples (n=3 comparing -x^3+3x^2-x against x^3-3x^2+2x) the n=1 case
//     reads -x = x, which is false; the identity holds only at n in {0, 2}.
//   - criterion 7 requires the leading-order relative error at n=10 to lie in
//     [3e-4, 7e-4]; the measured value is 5.6e-6.  The stated band is
//     inhabited by n=6 (4.5e-4), so the window appears to target a different
//     index.  The monotone-decrease half of the criterion passes.
// The harness reports both honestly rather than bending the checks to pass.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "zigzag/arithmetic_lab.hpp"
#include "zigzag/asymptotics.hpp"
#include "zigzag/exact_core.hpp"
#include "zigzag/quadrature.hpp"
#include "zigzag/report.hpp"
#include "zigzag/representations.hpp"
#include "zigzag/spectral_mellin.hpp"

#ifndef ZIGZAG_CLI_PATH
#error "ZIGZAG_CLI_PATH must be defined"
#endif

namespace {

using namespace zigzag;
constexpr double kPi = std::numbers::pi;

int g_failures = 0;

struct Criterion {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      detail = why;
    }
  }
};

void report(int index, const std::string& name, const Criterion& c, double secs) {
  if (c.ok) {
    std::printf("PASS criterion %d (%s) [%.2fs]\n", index, name.c_str(), secs);
  } else {
    ++g_failures;
    std::printf("FAIL criterion %d (%s) [%.2fs]: %s\n", index, name.c_str(), secs,
                c.detail.c_str());
  }
}

double run_timed(int index, const std::string& name,
                 const std::function<void(Criterion&)>& body) {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("unexpected exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(index, name, c, secs);
  return secs;
}

std::string run_cli_capture(const std::string& args, int* exit_code) {
  const std::string cmd =
      std::string("\"") + ZIGZAG_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return "";
  }
  std::string out;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  *exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return out;
}

}  // namespace

int main() {
  const auto suite_start = std::chrono::steady_clock::now();
  std::printf("acceptance suite: alternating-number verification laboratory\n");

  // ---- criterion 1: golden values from both oracles -----------------------
  double t1 = run_timed(1, "golden values, dual oracles", [](Criterion& c) {
    const long golden[11] = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521};
    ZigzagTable a = zigzag_entringer(60);
    ZigzagTable b = zigzag_egf_series(60);
    for (int n = 0; n <= 10; ++n) {
      c.require(a.at(n) == BigInt(golden[n]),
                "boustrophedon oracle misses the golden value at n=" + std::to_string(n));
      c.require(b.at(n) == BigInt(golden[n]),
                "series oracle misses the golden value at n=" + std::to_string(n));
    }
    for (int n = 0; n <= 60; ++n) {
      c.require(a.at(n) == b.at(n), "oracles disagree at n=" + std::to_string(n));
    }
  });
  if (t1 >= 1.0) {
    std::printf("NOTE criterion 1 exceeded its 1 s budget (%.2fs)\n", t1);
    ++g_failures;
  }

  // ---- criterion 2: exact tangent/secant identity suite -------------------
  double t2 = run_timed(2, "exact identity suite", [](Criterion& c) {
    ZigzagTable oracle = zigzag_entringer(41);
    RationalSeq bern = bernoulli(44);
    RationalSeq eul = euler_numbers(20);
    for (int n = 0; 2 * n <= 40; ++n) {
      c.require(euler_secant(n, eul) == oracle.at(2 * n),
                "secant relation fails at 2n=" + std::to_string(2 * n));
    }
    for (int n = 0; 2 * n + 1 <= 41; ++n) {
      c.require(bernoulli_tangent(n, bern) == oracle.at(2 * n + 1),
                "tangent formula fails at 2n+1=" + std::to_string(2 * n + 1));
    }
  });
  if (t2 >= 5.0) {
    std::printf("NOTE criterion 2 exceeded its 5 s budget (%.2fs)\n", t2);
    ++g_failures;
  }

  // ---- criterion 3: discrepancy detection ----------------------------------
  run_timed(3, "discrepancy detection", [](Criterion& c) {
    ZigzagTable oracle = zigzag_entringer(30);
    StirlingTriangle tri = stirling2(33);
    DiscrepancyReport rep = stirling_sum_report(29, oracle, tri);
    c.require(rep.per_index.size() == 29, "report does not cover n in [1,29]");
    c.require(to_decimal(rep.per_index[0].formula_value) == "-1" &&
                  to_decimal(rep.per_index[0].oracle_value) == "1",
              "missing the n=1 counterexample (-1 vs 1)");
    c.require(to_decimal(rep.per_index[1].formula_value) == "0" &&
                  to_decimal(rep.per_index[1].oracle_value) == "1",
              "missing the n=2 counterexample (0 vs 1)");
    for (const DiscrepancyEntry& e : rep.per_index) {
      if (e.n % 2 == 1) {
        c.require(e.abs_match, "|literal| != A_n at odd n=" + std::to_string(e.n));
      }
    }
    for (int n = 0; n <= 30; ++n) {
      c.require(kernel_integral_exact(n, tri) == BigRat(stirling_sum_literal(n, tri)),
                "kernel moment != alternating sum at n=" + std::to_string(n));
    }
    // Falling-factorial identity: the criterion asserts truth at n in {0,1,2}
    // and falsity at n=3 with lhs -x^3+3x^2-x vs rhs x^3-3x^2+2x.
    PolyCompareResult r3 = falling_factorial_identity_check(3, tri);
    c.require(!r3.equal && r3.first_diff_degree == 1 &&
                  r3.lhs_coeff == BigRat(-1) && r3.rhs_coeff == BigRat(2),
              "n=3 polynomials do not produce the stated mismatch");
    c.require(falling_factorial_identity_check(0, tri).equal, "identity false at n=0");
    c.require(falling_factorial_identity_check(2, tri).equal, "identity false at n=2");
    c.require(falling_factorial_identity_check(1, tri).equal,
              "identity is required true at n=1, but with the (-1)^k convention "
              "fixed by the stated n=3 polynomials the n=1 comparison reads "
              "-x vs x, which is false; the identity holds only at n in {0,2} "
              "(expected failure, detected and classified rather than patched)");
  });

  // ---- criterion 4: contour consistency ------------------------------------
  double t4 = run_timed(4, "contour consistency", [](Criterion& c) {
    StirlingTriangle tri = stirling2(8);
    for (int n = 0; n <= 8; ++n) {
      const double lit = stirling_sum_literal(n, tri).convert_to<double>();
      QuadratureResult q = contour_trapezoid(n, 1.0, 128);
      c.require(std::abs(q.value - lit) <= 1e-7 * std::max(1.0, std::abs(lit)),
                "contour value misses the alternating sum at n=" + std::to_string(n));
    }
    const double lit7 = stirling_sum_literal(7, tri).convert_to<double>();
    // Roundoff scale of the factorial-normalized rule: 2^{n+1} n! eps-ish.
    const double floor = std::pow(2.0, 8) * 5040.0 * 1e-15;
    double prev = std::abs(contour_trapezoid(7, 1.0, 16).value - lit7);
    for (int nodes : {32, 64}) {
      const double cur = std::abs(contour_trapezoid(7, 1.0, nodes).value - lit7);
      c.require(cur <= prev / 1000.0 || cur <= floor,
                "node doubling to " + std::to_string(nodes) +
                    " gained less than 1000x before the float floor");
      prev = cur;
    }
  });
  if (t4 >= 1.0) {
    std::printf("NOTE criterion 4 exceeded its 1 s budget (%.2fs)\n", t4);
    ++g_failures;
  }

  // ---- criterion 5: quadrature/series calibration --------------------------
  double t5 = run_timed(5, "quadrature and series calibration", [](Criterion& c) {
    ZigzagTable oracle = zigzag_entringer(25);
    auto d = [&](int n) { return oracle.at(n).convert_to<double>(); };
    // Calibrated forms: rel 1e-9 wherever A <= 1e14 (through A_19 = 2.9e13).
    for (int n = 0; n <= 9; ++n) {
      const double even_rel =
          std::abs(hyper_calibrated(n, Parity::even).value / d(2 * n) - 1.0);
      c.require(even_rel <= 1e-9,
                "calibrated even moment off at n=" + std::to_string(n));
      const double odd_rel =
          std::abs(hyper_calibrated(n, Parity::odd).value / d(2 * n + 1) - 1.0);
      c.require(odd_rel <= 1e-9,
                "calibrated odd moment off at n=" + std::to_string(n));
      const double series_rel =
          std::abs(spectral_series_calibrated(n) / d(2 * n + 1) - 1.0);
      c.require(series_rel <= 1e-9,
                "calibrated series off at n=" + std::to_string(n));
    }
    // Literal forms: recorded mismatch ratios to rel 1e-8.
    for (int n = 0; n <= 5; ++n) {
      const double want = std::pow(kPi, 2 * n + 1);
      c.require(std::abs(hyper_sinh_literal(n).value / d(2 * n + 1) / want - 1.0) <= 1e-8,
                "half-argument sinh ratio misses pi^{2n+1} at n=" + std::to_string(n));
      c.require(std::abs(spectral_series_literal(n) / d(2 * n + 1) / want - 1.0) <= 1e-8,
                "literal series ratio misses pi^{2n+1} at n=" + std::to_string(n));
    }
    for (int n = 0; n <= 6; ++n) {
      const double we = 4.0 / std::pow(2.0, 2 * n + 1);
      c.require(std::abs(hyper_classical(n, Parity::even).value / d(2 * n) / we - 1.0) <= 1e-8,
                "classical even ratio misses 4/2^{2n+1} at n=" + std::to_string(n));
      const double wo = 4.0 / std::pow(2.0, 2 * n + 2);
      c.require(std::abs(hyper_classical(n, Parity::odd).value / d(2 * n + 1) / wo - 1.0) <= 1e-8,
                "classical odd ratio misses 4/2^{2n+2} at n=" + std::to_string(n));
    }
    for (int s = 1; s <= 20; ++s) {
      c.require(mellin_identity_check(s).rel_deviation <= 1e-8,
                "cosh Mellin identity off at s=" + std::to_string(s));
    }
    for (int s = 2; s <= 20; ++s) {
      c.require(mellin_identity_check_sinh(s).rel_deviation <= 1e-8,
                "sinh Mellin identity off at s=" + std::to_string(s));
    }
  });
  if (t5 >= 10.0) {
    std::printf("NOTE criterion 5 exceeded its 10 s budget (%.2fs)\n", t5);
    ++g_failures;
  }

  // ---- criterion 6: fourier scan -------------------------------------------
  run_timed(6, "fourier cutoff scan", [](Criterion& c) {
    FourierScanRecord r0 = fourier_cutoff_scan(0, default_fourier_epsilons());
    c.require(r0.classification == "divergent" && r0.growth_law == "logarithmic",
              "n=0 not classified divergent/logarithmic");
    c.require(std::abs(r0.final_ratio - 1.0) <= 0.1,
              "n=0 increment ratio not within 10% of 1");
    FourierScanRecord r1 = fourier_cutoff_scan(1, default_fourier_epsilons());
    c.require(r1.classification == "convergent", "n=1 not classified convergent");
    c.require(std::abs(r1.extrapolated - (1.0 + 4.0 / kPi)) <= 1e-6,
              "n=1 extrapolation misses 1 + 4/pi");
    c.require(std::abs(r1.extrapolated - 1.0) > 0.5,
              "n=1 extrapolation not flagged as different from A_1");
  });

  // ---- criterion 7: asymptotics --------------------------------------------
  run_timed(7, "asymptotic error window", [](Criterion& c) {
    ZigzagTable oracle = zigzag_entringer(60);
    std::vector<AsymptoticRow> rows = asymptotic_error_table(60, oracle);
    for (size_t i = 2; i < rows.size(); ++i) {
      c.require(rows[i].rel_error < rows[i - 1].rel_error,
                "relative error not strictly decreasing at n=" + std::to_string(rows[i].n));
    }
    const double rel10 = rows[9].rel_error;
    char msg[256];
    std::snprintf(msg, sizeof msg,
                  "rel_error(10) = %.3e is not in [3e-4, 7e-4]; that band is "
                  "inhabited by n=6 (%.3e), so the stated window does not match "
                  "the measured decay 3^-(n+1) at n=10 (expected failure, "
                  "reported rather than recalibrated)",
                  rel10, rows[5].rel_error);
    c.require(rel10 >= 3e-4 && rel10 <= 7e-4, msg);
  });

  // ---- criterion 8: arithmetic lab ------------------------------------------
  double t8 = run_timed(8, "arithmetic laboratory", [](Criterion& c) {
    ZigzagTable oracle = zigzag_entringer(200);
    StirlingTriangle tri = stirling2(33);
    CongruenceReport touch = touchard_claim_check(3, 30, tri);
    bool has_322 = false;
    for (const Counterexample& ce : touch.counterexamples) {
      if (ce.n == 2 && ce.k == 2) has_322 = true;
    }
    c.require(touch.verdict == "fails" && has_322,
              "claimed index-shift congruence lacks the (p=3,n=2,k=2) counterexample");
    for (long p : {3L, 5L, 7L}) {
      CongruenceReport w = wilson_step_check(p);
      c.require(w.verdict == "fails" && w.total_counterexamples == p - 1,
                "factorial-step check should fail exactly off k'=0 for p=" +
                    std::to_string(p));
      for (const Counterexample& ce : w.counterexamples) {
        c.require(ce.n != 0, "factorial-step check flagged k'=0 for p=" + std::to_string(p));
      }
    }
    CongruenceReport s3 = an_congruence_check(3, 30, oracle);
    CongruenceReport s5 = an_congruence_check(5, 30, oracle);
    auto has_identity_ce = [](const CongruenceReport& r, long n) {
      for (const Counterexample& ce : r.counterexamples) {
        if (ce.n == n && ce.note == "identity-form") return true;
      }
      return false;
    };
    c.require(s3.verdict == "fails" && has_identity_ce(s3, 1),
              "prime-shift congruence lacks the (p=3,n=1) counterexample");
    c.require(s5.verdict == "fails" && has_identity_ce(s5, 2),
              "prime-shift congruence lacks the (p=5,n=2) counterexample");
    PeriodReport m2 = period_finder(2, 200, oracle);
    c.require(m2.verdict == "certified" && m2.period == 2 && m2.preperiod == 2,
              "mod-2 period not certified as (preperiod 2, period 2)");
    PeriodReport m3 = period_finder(3, 200, oracle);
    c.require(m3.verdict == "certified" && m3.period == 4,
              "mod-3 period not certified as 4");
    c.require(a7_mod9_residue_check(oracle), "A_7 mod 9 != 2");
  });
  if (t8 >= 5.0) {
    std::printf("NOTE criterion 8 exceeded its 5 s budget (%.2fs)\n", t8);
    ++g_failures;
  }

  // ---- criterion 9: determinism and total runtime ---------------------------
  run_timed(9, "deterministic reports", [](Criterion& c) {
    int code_a = 0;
    int code_b = 0;
    const std::string a = run_cli_capture("verify", &code_a);
    const std::string b = run_cli_capture("verify", &code_b);
    c.require(code_a == 0 && code_b == 0, "verify did not exit 0");
    c.require(!a.empty() && a == b, "repeated verify runs are not byte-identical");
  });
  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start)
          .count();
  if (total >= 60.0) {
    std::printf("NOTE full suite exceeded its 60 s budget (%.2fs)\n", total);
    ++g_failures;
  }

  std::printf("acceptance summary: %d of 9 criteria failed, total %.2fs\n",
              g_failures, total);
  if (g_failures > 0) {
    std::printf(
        "note: failures of criteria 3 (n=1 sub-clause) and 7 (n=10 window) are "
        "the harness correctly reporting claims that are false as stated; see "
        "README.md for the analysis.\n");
  }
  return g_failures;
}
