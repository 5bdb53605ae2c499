#include "zigzag/exact_core.hpp"

#include "zigzag/errors.hpp"

#include <sstream>
#include <utility>

namespace zigzag {

std::string to_decimal(const BigInt& v) { return v.str(); }

std::string to_decimal(const BigRat& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::vector<BigInt> factorial_table(int max_n) {
  if (max_n < 0) throw ContractError("invalid-argument", "factorial_table needs max_n >= 0");
  std::vector<BigInt> f(static_cast<size_t>(max_n) + 1);
  f[0] = 1;
  for (int n = 1; n <= max_n; ++n) f[n] = f[n - 1] * n;
  return f;
}

bool is_prime_trial(long p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (long d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

const char* to_string(OracleKind k) {
  return k == OracleKind::entringer ? "entringer" : "egf_series";
}

const BigInt& ZigzagTable::at(int n) const {
  if (n < 0 || n > max_index) {
    throw ContractError("range-exceeded",
                        "A_" + std::to_string(n) + " outside table (max " +
                            std::to_string(max_index) + ")");
  }
  return values[static_cast<size_t>(n)];
}

EntringerTriangle EntringerTriangle::build(int max_n) {
  if (max_n < 0) throw ContractError("invalid-argument", "triangle needs max_n >= 0");
  EntringerTriangle t;
  t.rows.reserve(static_cast<size_t>(max_n) + 1);
  t.rows.push_back({BigInt(1)});
  for (int n = 1; n <= max_n; ++n) {
    const auto& prev = t.rows.back();
    std::vector<BigInt> row(static_cast<size_t>(n) + 1);
    row[0] = 0;
    for (int k = 1; k <= n; ++k) row[k] = row[k - 1] + prev[static_cast<size_t>(n - k)];
    t.rows.push_back(std::move(row));
  }
  return t;
}

ZigzagTable zigzag_entringer(int max_index) {
  if (max_index < 0) throw ContractError("invalid-argument", "max_index must be >= 0");
  EntringerTriangle t = EntringerTriangle::build(max_index);
  ZigzagTable table;
  table.max_index = max_index;
  table.provenance = OracleKind::entringer;
  table.values.reserve(static_cast<size_t>(max_index) + 1);
  for (auto& row : t.rows) table.values.push_back(row.back());
  return table;
}

namespace {

// Coefficients of 1/cos x up to order n_max, as exact rationals, via the
// power-series reciprocal s_n = -sum_{j=1}^{n} cos_j * s_{n-j}, s_0 = 1.
std::vector<BigRat> secant_series(int n_max, const std::vector<BigInt>& fact) {
  std::vector<BigRat> cosc(static_cast<size_t>(n_max) + 1, BigRat(0));
  for (int m = 0; 2 * m <= n_max; ++m) {
    BigRat c(1, fact[static_cast<size_t>(2 * m)]);
    if (m % 2 == 1) c = -c;
    cosc[static_cast<size_t>(2 * m)] = c;
  }
  std::vector<BigRat> sec(static_cast<size_t>(n_max) + 1, BigRat(0));
  sec[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    BigRat acc(0);
    for (int j = 1; j <= n; ++j) acc += cosc[static_cast<size_t>(j)] * sec[static_cast<size_t>(n - j)];
    sec[static_cast<size_t>(n)] = -acc;
  }
  return sec;
}

}  // namespace

ZigzagTable zigzag_egf_series(int max_index) {
  if (max_index < 0) throw ContractError("invalid-argument", "max_index must be >= 0");
  const std::vector<BigInt> fact = factorial_table(max_index);
  const std::vector<BigRat> sec = secant_series(max_index, fact);

  std::vector<BigRat> sinc(static_cast<size_t>(max_index) + 1, BigRat(0));
  for (int m = 0; 2 * m + 1 <= max_index; ++m) {
    BigRat c(1, fact[static_cast<size_t>(2 * m + 1)]);
    if (m % 2 == 1) c = -c;
    sinc[static_cast<size_t>(2 * m + 1)] = c;
  }
  // tan = sin * sec (convolution), then A_n = n! * (sec_n + tan_n).
  ZigzagTable table;
  table.max_index = max_index;
  table.provenance = OracleKind::egf_series;
  table.values.reserve(static_cast<size_t>(max_index) + 1);
  for (int n = 0; n <= max_index; ++n) {
    BigRat tan_n(0);
    for (int j = 0; j <= n; ++j) tan_n += sinc[static_cast<size_t>(j)] * sec[static_cast<size_t>(n - j)];
    const BigRat a = BigRat(fact[static_cast<size_t>(n)]) * (sec[static_cast<size_t>(n)] + tan_n);
    if (boost::multiprecision::denominator(a) != 1) {
      throw ContractError("internal-integrality-violation",
                          "n! * [x^n](tan+sec) not integral at n=" + std::to_string(n));
    }
    table.values.push_back(boost::multiprecision::numerator(a));
  }
  return table;
}

const BigInt& StirlingTriangle::at(int n, int k) const {
  if (n < 0 || n > max_n || k < 0 || k > n) {
    throw ContractError("range-exceeded",
                        "S(" + std::to_string(n) + "," + std::to_string(k) + ") outside triangle");
  }
  return rows[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

BigInt StirlingTriangle::value_or_zero(long n, long k) const {
  if (n < 0 || k < 0 || k > n) return BigInt(0);
  if (n > max_n) {
    throw ContractError("range-exceeded", "S(" + std::to_string(n) + ",...) outside triangle");
  }
  return rows[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

StirlingTriangle stirling2(int max_n) {
  if (max_n < 0) throw ContractError("invalid-argument", "stirling2 needs max_n >= 0");
  StirlingTriangle t;
  t.max_n = max_n;
  t.rows.resize(static_cast<size_t>(max_n) + 1);
  t.rows[0] = {BigInt(1)};
  for (int n = 1; n <= max_n; ++n) {
    auto& row = t.rows[static_cast<size_t>(n)];
    const auto& prev = t.rows[static_cast<size_t>(n - 1)];
    row.assign(static_cast<size_t>(n) + 1, BigInt(0));
    for (int k = 1; k <= n; ++k) {
      BigInt v = prev[static_cast<size_t>(k - 1)];
      if (k <= n - 1) v += k * prev[static_cast<size_t>(k)];
      row[static_cast<size_t>(k)] = std::move(v);
    }
  }
  return t;
}

const BigRat& RationalSeq::at(int index) const {
  auto it = values.find(index);
  if (it == values.end()) {
    throw ContractError("range-exceeded", "sequence has no entry at index " + std::to_string(index));
  }
  return it->second;
}

RationalSeq bernoulli(int max_index) {
  if (max_index < 0) throw ContractError("invalid-argument", "bernoulli needs max_index >= 0");
  // Akiyama–Tanigawa: start from the harmonic row, repeatedly take weighted
  // forward differences; the leading entry after j sweeps is B_j (with
  // B_1 = +1/2, flipped below to the B_1 = -1/2 convention).
  std::vector<BigRat> a(static_cast<size_t>(max_index) + 1);
  for (int m = 0; m <= max_index; ++m) a[static_cast<size_t>(m)] = BigRat(1, m + 1);
  RationalSeq seq;
  seq.values[0] = a[0];
  for (int j = 1; j <= max_index; ++j) {
    for (int m = 0; m <= max_index - j; ++m) {
      a[static_cast<size_t>(m)] = (m + 1) * (a[static_cast<size_t>(m)] - a[static_cast<size_t>(m + 1)]);
    }
    seq.values[j] = a[0];
  }
  if (max_index >= 1) seq.values[1] = BigRat(-1, 2);
  return seq;
}

RationalSeq euler_numbers(int max_n) {
  if (max_n < 0) throw ContractError("invalid-argument", "euler_numbers needs max_n >= 0");
  const std::vector<BigInt> fact = factorial_table(2 * max_n);
  const std::vector<BigRat> sec = secant_series(2 * max_n, fact);
  RationalSeq seq;
  for (int n = 0; n <= max_n; ++n) {
    BigRat e = BigRat(fact[static_cast<size_t>(2 * n)]) * sec[static_cast<size_t>(2 * n)];
    if (n % 2 == 1) e = -e;
    if (boost::multiprecision::denominator(e) != 1) {
      throw ContractError("internal-integrality-violation",
                          "secant coefficient not integral at 2n=" + std::to_string(2 * n));
    }
    seq.values[2 * n] = e;
  }
  return seq;
}

}  // namespace zigzag
