#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zigzag/errors.hpp"
#include "zigzag/exact_core.hpp"

#include <vector>

using namespace zigzag;

namespace {

// Independent cross-check sequence for Stirling row sums: Bell numbers from
// the additive triangle (no Stirling values involved).
std::vector<BigInt> bell_numbers(int max_n) {
  std::vector<BigInt> bell{BigInt(1)};
  std::vector<BigInt> row{BigInt(1)};
  for (int i = 0; i < max_n; ++i) {
    std::vector<BigInt> next{row.back()};
    for (const BigInt& x : row) next.push_back(next.back() + x);
    row = std::move(next);
    bell.push_back(row.front());
  }
  return bell;
}

// Independent Bernoulli oracle: B_m = -1/(m+1) * sum_{j<m} C(m+1,j) B_j.
std::vector<BigRat> bernoulli_recurrence(int max_index) {
  std::vector<BigRat> b(static_cast<size_t>(max_index) + 1);
  b[0] = 1;
  std::vector<std::vector<BigInt>> choose(static_cast<size_t>(max_index) + 2);
  for (int n = 0; n <= max_index + 1; ++n) {
    choose[n].assign(static_cast<size_t>(n) + 1, BigInt(1));
    for (int k = 1; k < n; ++k) choose[n][k] = choose[n - 1][k - 1] + choose[n - 1][k];
  }
  for (int m = 1; m <= max_index; ++m) {
    BigRat acc(0);
    for (int j = 0; j < m; ++j) acc += BigRat(choose[m + 1][j]) * b[static_cast<size_t>(j)];
    b[static_cast<size_t>(m)] = -acc / (m + 1);
  }
  return b;
}

const std::vector<long> kTableOneValues = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521};

}  // namespace

TEST_CASE("partial-sum triangle oracle reproduces the reference values") {
  ZigzagTable t = zigzag_entringer(10);
  REQUIRE(t.max_index == 10);
  for (int n = 0; n <= 10; ++n) CHECK(t.at(n) == kTableOneValues[static_cast<size_t>(n)]);
  CHECK(t.provenance == OracleKind::entringer);

  // Triangle shape: row n has n+1 entries, ends at A_n, starts with 0 (n>=1).
  EntringerTriangle tri = EntringerTriangle::build(6);
  for (int n = 0; n <= 6; ++n) {
    CHECK(tri.rows[n].size() == static_cast<size_t>(n) + 1);
    if (n >= 1) CHECK(tri.rows[n][0] == 0);
  }
  CHECK(tri.rows[4].back() == 5);
}

TEST_CASE("series oracle reproduces the reference values and the two oracles agree") {
  ZigzagTable s = zigzag_egf_series(12);
  for (int n = 0; n <= 10; ++n) CHECK(s.at(n) == kTableOneValues[static_cast<size_t>(n)]);
  CHECK(s.at(11) == 353792);
  CHECK(s.at(12) == 2702765);

  ZigzagTable a = zigzag_entringer(60);
  ZigzagTable b = zigzag_egf_series(60);
  for (int n = 0; n <= 60; ++n) CHECK(a.at(n) == b.at(n));
}

TEST_CASE("zigzag growth is strictly monotone from n=3 on") {
  ZigzagTable t = zigzag_entringer(40);
  for (int n = 3; n < 40; ++n) CHECK(t.at(n + 1) > t.at(n));
}

TEST_CASE("table bounds are enforced") {
  ZigzagTable t = zigzag_entringer(5);
  CHECK_THROWS_AS(t.at(6), ContractError);
  CHECK_THROWS_AS(t.at(-1), ContractError);
}

TEST_CASE("set-partition triangle: frozen row and recurrence") {
  StirlingTriangle s = stirling2(200);
  CHECK(s.at(3, 2) == 3);
  CHECK(s.at(5, 3) == 25);
  // Row 5 in full.
  const long row5[] = {0, 1, 15, 25, 10, 1};
  for (int k = 0; k <= 5; ++k) CHECK(s.at(5, k) == row5[k]);
  // Recurrence holds across the full triangle.
  for (int n = 1; n <= 200; ++n) {
    for (int k = 1; k <= n; ++k) {
      CHECK(s.at(n, k) == k * s.value_or_zero(n - 1, k) + s.value_or_zero(n - 1, k - 1));
    }
  }
  CHECK(s.value_or_zero(4, -1) == 0);
  CHECK(s.value_or_zero(4, 5) == 0);
}

TEST_CASE("set-partition row sums match the independent Bell oracle") {
  StirlingTriangle s = stirling2(25);
  std::vector<BigInt> bell = bell_numbers(25);
  for (int n = 0; n <= 25; ++n) {
    BigInt total(0);
    for (int k = 0; k <= n; ++k) total += s.at(n, k);
    CHECK(total == bell[static_cast<size_t>(n)]);
  }
}

TEST_CASE("Bernoulli table: frozen values, odd-index convention, independent recurrence") {
  RationalSeq b = bernoulli(42);
  CHECK(b.at(0) == 1);
  CHECK(b.at(1) == BigRat(-1, 2));
  CHECK(b.at(2) == BigRat(1, 6));
  CHECK(b.at(4) == BigRat(-1, 30));
  CHECK(b.at(8) == BigRat(-1, 30));
  CHECK(b.at(12) == BigRat(-691, 2730));
  for (int n = 3; n <= 41; n += 2) CHECK(b.at(n) == 0);

  std::vector<BigRat> ref = bernoulli_recurrence(42);
  for (int n = 0; n <= 42; ++n) CHECK(b.at(n) == ref[static_cast<size_t>(n)]);
}

TEST_CASE("Euler numbers: signs, magnitudes, and the secant identity") {
  RationalSeq e = euler_numbers(20);
  CHECK(e.at(0) == 1);
  CHECK(e.at(2) == -1);
  CHECK(e.at(4) == 5);
  CHECK(e.at(6) == -61);
  CHECK(e.at(10) == -50521);
  ZigzagTable t = zigzag_entringer(40);
  for (int n = 0; n <= 20; ++n) {
    BigRat v = e.at(2 * n);
    if (v < 0) v = -v;
    CHECK(v == BigRat(t.at(2 * n)));
  }
}

TEST_CASE("factorials and trial-division primality") {
  std::vector<BigInt> f = factorial_table(20);
  CHECK(f[0] == 1);
  CHECK(f[5] == 120);
  CHECK(f[20] == BigInt("2432902008176640000"));
  CHECK(is_prime_trial(2));
  CHECK(is_prime_trial(7919));
  CHECK(!is_prime_trial(1));
  CHECK(!is_prime_trial(9));
  CHECK(!is_prime_trial(9999));
}

TEST_CASE("decimal rendering of exact values") {
  CHECK(to_decimal(BigInt("-353792")) == "-353792");
  CHECK(to_decimal(BigRat(-1, 2)) == "-1/2");
  CHECK(to_decimal(BigRat(8, 4)) == "2");
}
