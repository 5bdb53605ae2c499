#include "zigzag/asymptotics.hpp"

#include <boost/math/constants/constants.hpp>

#include "zigzag/errors.hpp"

namespace zigzag {

namespace {

const HighFloat& hf_pi() {
  static const HighFloat pi = boost::math::constants::pi<HighFloat>();
  return pi;
}

HighFloat leading_constant_log() { return log(HighFloat(4) / hf_pi()); }

HighFloat ratio_log() { return log(HighFloat(2) / hf_pi()); }

}  // namespace

double asymptotic_estimate_log(int n) {
  if (n < 0) throw ContractError("invalid-argument", "index must be nonnegative");
  HighFloat lgamma_np1 = 0;
  for (int k = 2; k <= n; ++k) lgamma_np1 += log(HighFloat(k));
  const HighFloat value = leading_constant_log() + n * ratio_log() + lgamma_np1;
  return value.convert_to<double>();
}

std::vector<AsymptoticRow> asymptotic_error_table(int N,
                                                  const ZigzagTable& oracle) {
  if (N < 2) throw ContractError("invalid-argument", "error table needs N >= 2");
  if (oracle.max_index < N) {
    throw ContractError("range-exceeded", "oracle table does not reach the requested index");
  }
  std::vector<AsymptoticRow> rows;
  rows.reserve(static_cast<size_t>(N));
  const HighFloat c0 = leading_constant_log();
  const HighFloat c1 = ratio_log();
  HighFloat lgamma_np1 = 0;  // ln Gamma(n+1) accumulated as Sum ln k
  for (int n = 1; n <= N; ++n) {
    if (n >= 2) lgamma_np1 += log(HighFloat(n));
    const HighFloat estimate_log = c0 + n * c1 + lgamma_np1;
    const HighFloat exact_log = log(HighFloat(oracle.at(n)));
    const HighFloat rel = abs(exp(estimate_log - exact_log) - 1);
    AsymptoticRow row;
    row.n = n;
    row.estimate_log = estimate_log.convert_to<double>();
    row.exact_log = exact_log.convert_to<double>();
    row.rel_error = rel.convert_to<double>();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace zigzag
