#include "zigzag/representations.hpp"

#include <utility>

#include "zigzag/errors.hpp"

namespace zigzag {

namespace {

BigRat abs_rat(const BigRat& v) { return v < 0 ? BigRat(-v) : v; }

// Coefficients (index = degree) of x(x-1)(x-2)...(x-(n-1)); {1} for n = 0.
std::vector<BigInt> falling_factorial_coeffs(int n) {
  std::vector<BigInt> coeffs{BigInt(1)};
  for (int j = 0; j < n; ++j) {
    std::vector<BigInt> next(coeffs.size() + 1, BigInt(0));
    for (size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= BigInt(j) * coeffs[i];
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

}  // namespace

BigInt stirling_sum_literal(int n, const StirlingTriangle& tri) {
  if (n < 0) throw ContractError("invalid-argument", "index must be nonnegative");
  std::vector<BigInt> fact = factorial_table(n);
  BigInt sum = 0;
  for (int k = 0; k <= n; ++k) {
    BigInt term = (BigInt(1) << (n - k)) * fact[static_cast<size_t>(k)] * tri.at(n, k);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

DiscrepancyReport stirling_sum_report(int N, const ZigzagTable& oracle,
                                      const StirlingTriangle& tri) {
  if (N < 1) throw ContractError("invalid-argument", "report range must be >= 1");
  DiscrepancyReport rep;
  rep.representation_id = "stirling_alternating_sum";

  bool even_all_zero = true;
  bool any_even = false;
  bool odd_all_abs_match = true;
  bool odd_sign_alternates = true;
  bool any_odd = false;
  for (int n = 1; n <= N; ++n) {
    DiscrepancyEntry e;
    e.n = n;
    BigInt literal = stirling_sum_literal(n, tri);
    e.formula_value = BigRat(literal);
    e.oracle_value = oracle.at(n);
    e.match = (e.formula_value == BigRat(e.oracle_value));
    e.abs_match = (abs_rat(e.formula_value) == BigRat(e.oracle_value));
    e.formula_zero = (literal == 0);
    if (n % 2 == 0 && n >= 2) {
      any_even = true;
      even_all_zero = even_all_zero && e.formula_zero;
    }
    if (n % 2 == 1) {
      any_odd = true;
      odd_all_abs_match = odd_all_abs_match && e.abs_match;
      const bool expect_negative = ((n + 1) / 2) % 2 == 1;
      const bool is_negative = literal < 0;
      odd_sign_alternates =
          odd_sign_alternates && !e.formula_zero && (is_negative == expect_negative);
    }
    rep.per_index.push_back(std::move(e));
  }

  std::string cls;
  const auto add_code = [&cls](const char* code) {
    if (!cls.empty()) cls += ';';
    cls += code;
  };
  if (any_even && even_all_zero) add_code("even-index-zero");
  if (any_odd && odd_all_abs_match) add_code("odd-abs-match");
  if (any_odd && odd_all_abs_match && odd_sign_alternates) {
    add_code("odd-sign-alternating-pairs");
  }
  if (cls.empty()) cls = "irregular";
  rep.classification = cls;
  if (any_odd && odd_all_abs_match) {
    rep.calibration = "odd n: A_n = |value|";
    if (odd_sign_alternates) {
      rep.calibration += "; sign follows (-1)^((n+1)/2) on the tested range";
    }
  }
  return rep;
}

BigInt bernoulli_tangent(int n, const RationalSeq& bernoulli_table) {
  if (n < 0) throw ContractError("invalid-argument", "index must be nonnegative");
  const int idx = 2 * n + 2;
  BigRat b = bernoulli_table.at(idx);
  BigInt pow4 = BigInt(1) << idx;  // 2^{2n+2}
  BigRat value = BigRat(pow4 * (pow4 - 1), BigInt(idx)) * b;
  if (n % 2 == 1) value = -value;
  if (boost::multiprecision::denominator(value) != 1) {
    throw ContractError("non-integral-result",
                        "tangent-number formula did not reduce to an integer");
  }
  return boost::multiprecision::numerator(value);
}

BigInt euler_secant(int n, const RationalSeq& euler_table) {
  if (n < 0) throw ContractError("invalid-argument", "index must be nonnegative");
  BigRat v = euler_table.at(2 * n);
  if (v < 0) v = -v;
  if (boost::multiprecision::denominator(v) != 1) {
    throw ContractError("non-integral-result", "secant number is not an integer");
  }
  return boost::multiprecision::numerator(v);
}

std::vector<BigRat> stirling_kernel_poly(int n, const StirlingTriangle& tri) {
  if (n < 0) throw ContractError("invalid-argument", "index must be nonnegative");
  std::vector<BigRat> coeffs(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    BigRat c(tri.at(n, k), BigInt(1) << k);
    coeffs[static_cast<size_t>(k)] = (k % 2 == 0) ? c : -c;
  }
  return coeffs;
}

BigRat kernel_integral_exact(int n, const StirlingTriangle& tri) {
  std::vector<BigRat> coeffs = stirling_kernel_poly(n, tri);
  std::vector<BigInt> fact = factorial_table(n);
  BigRat sum = 0;
  for (int k = 0; k <= n; ++k) {
    sum += coeffs[static_cast<size_t>(k)] * BigRat(fact[static_cast<size_t>(k)]);
  }
  return BigRat(BigInt(1) << n) * sum;
}

BigRat laplace_product_integral_exact(int n) {
  if (n < 1) throw ContractError("invalid-argument", "product integral needs n >= 1");
  // Expand y (y-2)(y-4)...(y-2(n-1)).
  std::vector<BigInt> coeffs{BigInt(0), BigInt(1)};  // the polynomial y
  for (int j = 1; j < n; ++j) {
    std::vector<BigInt> next(coeffs.size() + 1, BigInt(0));
    for (size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= BigInt(2 * j) * coeffs[i];
    }
    coeffs = std::move(next);
  }
  std::vector<BigInt> fact = factorial_table(static_cast<int>(coeffs.size()) - 1);
  BigInt sum = 0;
  for (size_t k = 0; k < coeffs.size(); ++k) sum += coeffs[k] * fact[k];
  return BigRat(sum);
}

PolyCompareResult falling_factorial_identity_check(int n,
                                                   const StirlingTriangle& tri) {
  if (n < 0) throw ContractError("invalid-argument", "index must be nonnegative");
  std::vector<BigRat> lhs(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    BigRat c(tri.at(n, k));
    lhs[static_cast<size_t>(k)] = (k % 2 == 0) ? c : -c;
  }
  std::vector<BigInt> rhs = falling_factorial_coeffs(n);

  PolyCompareResult res;
  res.equal = true;
  for (size_t d = 0; d < lhs.size(); ++d) {
    BigRat r(rhs[d]);
    if (lhs[d] != r) {
      res.equal = false;
      res.first_diff_degree = static_cast<int>(d);
      res.lhs_coeff = lhs[d];
      res.rhs_coeff = r;
      break;
    }
  }
  return res;
}

}  // namespace zigzag
