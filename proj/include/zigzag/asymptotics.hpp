#pragma once

#include <vector>

#include "zigzag/exact_core.hpp"

namespace zigzag {

struct AsymptoticRow {
  int n = 0;
  double estimate_log = 0.0;  // natural log of (4/pi)(2/pi)^n n!
  double exact_log = 0.0;     // natural log of A_n
  double rel_error = 0.0;     // |exp(estimate_log - exact_log) - 1|
};

// ln(4/pi) + n ln(2/pi) + ln Gamma(n+1), with ln Gamma(n+1) accumulated as
// Sum ln k over the exact integer argument.  Log-domain keeps n up to 1e5 in
// range.
double asymptotic_estimate_log(int n);

// Rows for n = 1..N.  The relative errors shrink like 3^{-(n+1)}, far below
// double rounding noise by n ~ 28, so the internal arithmetic runs at
// 50-decimal-digit precision and only the stored fields are rounded to
// double.
std::vector<AsymptoticRow> asymptotic_error_table(int N,
                                                  const ZigzagTable& oracle);

}  // namespace zigzag
