#pragma once

#include <string>
#include <vector>

#include "zigzag/exact_core.hpp"

namespace zigzag {

struct DiscrepancyEntry {
  int n = 0;
  BigRat formula_value;
  BigInt oracle_value;
  bool match = false;         // formula_value == oracle_value exactly
  bool abs_match = false;     // |formula_value| == oracle_value exactly
  bool formula_zero = false;  // formula_value == 0
};

struct DiscrepancyReport {
  std::string representation_id;
  std::vector<DiscrepancyEntry> per_index;
  // Derived only from per_index data; semicolon-joined pattern codes such as
  // "even-index-zero;odd-abs-match;odd-sign-alternating-pairs".
  std::string classification;
  // Optional human-readable description of a fitted correction; empty when
  // no calibration is observed.
  std::string calibration;
};

// Sum_{k=0}^{n} (-1)^k 2^{n-k} k! S(n,k), exactly as the claimed closed form
// states it -- no sign or normalization repair.
BigInt stirling_sum_literal(int n, const StirlingTriangle& tri);

// Compares stirling_sum_literal(n) with A_n for 1 <= n <= N and derives the
// mismatch pattern (zero at even n, |value| = A_n at odd n) from the data.
DiscrepancyReport stirling_sum_report(int N, const ZigzagTable& oracle,
                                      const StirlingTriangle& tri);

// A_{2n+1} = (-1)^n 2^{2n+2} (2^{2n+2} - 1) / (2n+2) * B_{2n+2}; exact.
BigInt bernoulli_tangent(int n, const RationalSeq& bernoulli_table);

// A_{2n} = |E_{2n}|; exact.
BigInt euler_secant(int n, const RationalSeq& euler_table);

// Coefficient vector (index = degree) of f_n(y) = Sum_k (-1)^k S(n,k) (y/2)^k.
std::vector<BigRat> stirling_kernel_poly(int n, const StirlingTriangle& tri);

// 2^n * Integral_0^inf e^{-y} f_n(y) dy evaluated exactly via the moment rule
// Integral e^{-y} y^k dy = k!.  Equals stirling_sum_literal(n) identically.
BigRat kernel_integral_exact(int n, const StirlingTriangle& tri);

// Integral_0^inf e^{-y} * y (y-2)(y-4)...(y-2(n-1)) dy via exact moments.
BigRat laplace_product_integral_exact(int n);

struct PolyCompareResult {
  bool equal = false;
  // Lowest differing degree and the two coefficients there; degree = -1 when
  // the polynomials are equal.
  int first_diff_degree = -1;
  BigRat lhs_coeff;
  BigRat rhs_coeff;
};

// Compares Sum_k (-1)^k S(n,k) x^k against the falling factorial
// x(x-1)...(x-n+1), coefficient by coefficient.
PolyCompareResult falling_factorial_identity_check(int n,
                                                   const StirlingTriangle& tri);

}  // namespace zigzag
