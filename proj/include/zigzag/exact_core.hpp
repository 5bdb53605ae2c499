#pragma once

#include "zigzag/numeric.hpp"

#include <map>
#include <vector>

namespace zigzag {

enum class OracleKind { entringer, egf_series };

const char* to_string(OracleKind k);

// Exact table of alternating-permutation counts A_0..A_max_index, tagged with
// the independent construction that produced it. Immutable after build; safe
// to share across threads read-only.
struct ZigzagTable {
  int max_index = -1;
  std::vector<BigInt> values;  // values[n] = A_n
  OracleKind provenance = OracleKind::entringer;

  const BigInt& at(int n) const;  // throws ContractError("range-exceeded")
};

// Triangle of alternating-direction partial sums. Row 0 is [1]; row n starts
// with 0 and accumulates row n-1 read in reverse, so row n's last entry is
// A_n. This is the primary exact oracle (O(N^2) big-integer additions).
struct EntringerTriangle {
  std::vector<std::vector<BigInt>> rows;

  static EntringerTriangle build(int max_n);
};

// Oracle #1: boundary of the partial-sum triangle.
ZigzagTable zigzag_entringer(int max_index);

// Oracle #2: exact rational power series of tan x + sec x (sec as the series
// reciprocal of cos, tan as sin*sec); A_n = n! * [x^n]. The two oracles share
// no intermediate values. Throws ContractError("internal-integrality-
// violation") if any n!*coefficient fails to reduce to an integer.
ZigzagTable zigzag_egf_series(int max_index);

// Set-partition counts S(n,k) by the standard triangle recurrence
// S(n,k) = k*S(n-1,k) + S(n-1,k-1).
struct StirlingTriangle {
  int max_n = -1;
  std::vector<std::vector<BigInt>> rows;  // rows[n][k], 0 <= k <= n

  const BigInt& at(int n, int k) const;        // strict bounds check
  BigInt value_or_zero(long n, long k) const;  // 0 outside the triangle
};
StirlingTriangle stirling2(int max_n);

// Sparse exact-rational sequence (Bernoulli and Euler tables live here).
struct RationalSeq {
  std::map<int, BigRat> values;

  const BigRat& at(int index) const;  // throws ContractError("range-exceeded")
};

// B_0..B_max_index via the Akiyama–Tanigawa scheme. The odd-index convention
// is B_1 = -1/2 (recorded in report metadata; only even indices feed the
// downstream tangent-number formula, so the choice is inert there).
RationalSeq bernoulli(int max_index);

// E_0, E_2, ..., E_{2*max_n} (keyed by 2n) from the exact secant series:
// sec x = sum (-1)^n E_2n x^2n / (2n)!, so E_0 = 1, E_2 = -1, E_4 = 5, ...
// and |E_2n| = A_2n. Integer-valued; integrality is verified.
RationalSeq euler_numbers(int max_n);

}  // namespace zigzag
