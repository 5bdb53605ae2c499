#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "zigzag/arithmetic_lab.hpp"
#include "zigzag/errors.hpp"
#include "zigzag/exact_core.hpp"

using namespace zigzag;

namespace {

const ZigzagTable& oracle500() {
  static const ZigzagTable t = zigzag_entringer(500);
  return t;
}

const StirlingTriangle& tri40() {
  static const StirlingTriangle t = stirling2(40);
  return t;
}

bool has_ce(const CongruenceReport& r, long n, long k) {
  return std::any_of(r.counterexamples.begin(), r.counterexamples.end(),
                     [&](const Counterexample& ce) { return ce.n == n && ce.k == k; });
}

}  // namespace

TEST_CASE("residue reduction normalizes negatives") {
  CHECK(reduce_mod(BigInt(-6), 5) == 4);
  CHECK(reduce_mod(BigInt(-5), 5) == 0);
  CHECK(reduce_mod(BigInt(272), 9) == 2);
  CHECK(reduce_mod(BigInt(0), 7) == 0);
}

TEST_CASE("index-shift congruence for set-partition counts: claimed form fails") {
  CongruenceReport r = touchard_claim_check(3, 30, tri40());
  CHECK(r.claim.claim_id == "touchard_claimed");
  CHECK(r.verdict == "fails");
  REQUIRE(!r.counterexamples.empty());
  // First counterexample in scan order (n=1, k=2): lhs 1, rhs 0.
  CHECK(r.counterexamples.front().n == 1);
  CHECK(r.counterexamples.front().k == 2);
  CHECK(r.counterexamples.front().lhs == 1);
  CHECK(r.counterexamples.front().rhs == 0);
  // The (n=2, k=2) counterexample: S(5,2)=15 = 0 mod 3 vs S(2,2)+S(2,0)=1.
  CHECK(has_ce(r, 2, 2));
  // Grid size: n in [1,30], k in [0, n+3].
  CHECK(r.tested == 585);
  CHECK(r.total_counterexamples >= static_cast<long>(r.counterexamples.size()));
  CHECK(r.counterexamples.size() <= static_cast<size_t>(kCounterexampleCap));
}

TEST_CASE("index-shift congruence: shifted variant holds on the grid") {
  std::vector<CongruenceReport> scan = touchard_variant_scan({3, 5, 7}, 30, tri40());
  int shifted_seen = 0;
  int claimed_seen = 0;
  for (const CongruenceReport& r : scan) {
    if (r.claim.claim_id == "touchard_variant:shifted") {
      ++shifted_seen;
      CHECK(r.verdict == "holds_on_grid");
      CHECK(r.total_counterexamples == 0);
    }
    if (r.claim.claim_id == "touchard_variant:claimed") {
      ++claimed_seen;
      CHECK(r.verdict == "fails");
    }
  }
  CHECK(shifted_seen == 3);
  CHECK(claimed_seen == 3);
}

TEST_CASE("congruence checks validate their inputs") {
  CHECK_THROWS_AS(touchard_claim_check(4, 30, tri40()), ContractError);
  CHECK_THROWS_AS(touchard_claim_check(10007, 30, tri40()), ContractError);
  CHECK_THROWS_AS(touchard_claim_check(3, 2, tri40()), ContractError);
  StirlingTriangle small = stirling2(10);
  CHECK_THROWS_AS(touchard_claim_check(3, 30, small), ContractError);
}

TEST_CASE("factorial step check holds only at k'=0") {
  for (long p : {3L, 5L, 7L}) {
    CongruenceReport r = wilson_step_check(p);
    CHECK(r.verdict == "fails");
    CHECK(r.tested == p);
    CHECK(r.total_counterexamples == p - 1);
    for (const Counterexample& ce : r.counterexamples) {
      CHECK(ce.n >= 1);  // k'=0 never appears as a counterexample
      CHECK(ce.n <= p - 1);
    }
  }
  CHECK_THROWS_AS(wilson_step_check(6), ContractError);
}

TEST_CASE("prime-shift congruence fails in both forms") {
  CongruenceReport r3 = an_congruence_check(3, 30, oracle500());
  CHECK(r3.verdict == "fails");
  // identity form at n=1: A_4 = 5 = 2 mod 3, but A_1 = 1.
  bool found31 = false;
  for (const Counterexample& ce : r3.counterexamples) {
    if (ce.n == 1 && ce.note == "identity-form") {
      found31 = true;
      CHECK(ce.lhs == 2);
      CHECK(ce.rhs == 1);
    }
  }
  CHECK(found31);

  CongruenceReport r5 = an_congruence_check(5, 30, oracle500());
  CHECK(r5.verdict == "fails");
  bool found52 = false;
  for (const Counterexample& ce : r5.counterexamples) {
    if (ce.n == 2 && ce.note == "identity-form") {
      found52 = true;
      CHECK(ce.lhs == 2);
      CHECK(ce.rhs == 1);
    }
  }
  CHECK(found52);

  // The doubling form also fails: first at n=2 for p=3.
  bool doubling_ce = false;
  for (const Counterexample& ce : r3.counterexamples) {
    if (ce.note == "doubling-form") doubling_ce = true;
  }
  CHECK(doubling_ce);
}

TEST_CASE("divisibility probe for the squared-prime refinement") {
  CongruenceReport r = mod_p2_residue_probe(3, 30, oracle500());
  CHECK(r.claim.claim_id == "mod_p2_probe");
  CHECK(r.verdict == "fails");
  // Where the difference is divisible by p, an implied residue is recorded.
  REQUIRE(!r.implied_residues.empty());
  CHECK(r.implied_residues.front().first == 0);
  CHECK(r.implied_residues.front().second == 1);
  bool n1 = false;
  for (const auto& [n, res] : r.implied_residues) {
    if (n == 1) {
      n1 = true;
      CHECK(res == 2);
    }
  }
  CHECK(n1);
  // First incompatibility at n=2: A_5 - 2^3 A_2 = 8, not divisible by 3.
  REQUIRE(!r.counterexamples.empty());
  CHECK(r.counterexamples.front().n == 2);

  try {
    mod_p2_residue_probe(2, 30, oracle500());
    FAIL("expected rejection of p=2");
  } catch (const ContractError& e) {
    CHECK(e.code() == "even-prime-rejected");
  }
}

TEST_CASE("eventual periods of the residue stream") {
  PeriodReport m2 = period_finder(2, 200, oracle500());
  CHECK(m2.verdict == "certified");
  CHECK(m2.preperiod == 2);
  CHECK(m2.period == 2);
  CHECK(m2.residue_cycle == std::vector<long>{1, 0});

  PeriodReport m3 = period_finder(3, 200, oracle500());
  CHECK(m3.verdict == "certified");
  CHECK(m3.preperiod == 1);
  CHECK(m3.period == 4);
  CHECK(m3.residue_cycle == std::vector<long>{1, 1, 2, 2});

  PeriodReport m5 = period_finder(5, 200, oracle500());
  CHECK(m5.preperiod == 1);
  CHECK(m5.period == 4);
  CHECK(m5.residue_cycle == std::vector<long>{1, 1, 2, 0});

  PeriodReport m7 = period_finder(7, 200, oracle500());
  CHECK(m7.preperiod == 1);
  CHECK(m7.period == 12);

  PeriodReport m9 = period_finder(9, 500, oracle500());
  CHECK(m9.verdict == "certified");
  CHECK(m9.preperiod == 2);
  CHECK(m9.period == 12);
  CHECK(m9.residue_cycle ==
        std::vector<long>{1, 2, 5, 7, 7, 2, 8, 7, 4, 2, 2, 7});

  CHECK(m2.residue_prefix.size() == 32);
  CHECK_THROWS_AS(period_finder(1, 200, oracle500()), ContractError);
  CHECK_THROWS_AS(period_finder(7, 20, oracle500()), ContractError);
}

TEST_CASE("standalone residue check: A_7 mod 9") {
  CHECK(a7_mod9_residue_check(oracle500()));
}
