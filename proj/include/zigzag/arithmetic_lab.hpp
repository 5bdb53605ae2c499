#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zigzag/exact_core.hpp"

namespace zigzag {

inline constexpr int kCounterexampleCap = 100;
inline constexpr long kMaxPrime = 10000;

struct CongruenceClaim {
  std::string claim_id;
  long p = 0;
  long n_max = 0;
};

struct Counterexample {
  long n = -1;
  long k = -1;  // -1 when the claim has no k parameter
  long lhs = 0;
  long rhs = 0;
  std::string note;
};

struct CongruenceReport {
  CongruenceClaim claim;
  long tested = 0;
  std::vector<Counterexample> counterexamples;  // capped at kCounterexampleCap
  long total_counterexamples = 0;
  std::string verdict;  // "holds_on_grid" | "fails" | "vacuous"
  // Used only by mod_p2_residue_probe: for each n where p divides
  // A_{n+p} - 2^p A_n, the implied correction residue ((diff/p) mod p).
  std::vector<std::pair<long, long>> implied_residues;
};

struct PeriodReport {
  long modulus = 0;
  long preperiod = 0;
  long period = 0;
  std::vector<long> residue_cycle;
  std::string verdict;  // "certified" | "vacuous"
  // First residues (up to 32), attached for vacuous verdicts and diagnostics.
  std::vector<long> residue_prefix;
};

// v mod m mapped into [0, m).
long reduce_mod(const BigInt& v, long m);

// Claimed shift rule S(n+p, k) == S(n, k) + S(n, k-p+1) (mod p), tested for
// 1 <= n <= n_max, 0 <= k <= n+p.  The triangle must extend to n_max + p.
CongruenceReport touchard_claim_check(long p, int n_max,
                                      const StirlingTriangle& tri);

struct VariantTerm {
  int dn = 0;        // row offset added to n
  int dk_const = 0;  // constant column offset added to k
  int dk_p = 0;      // column offset multiplied by p
};

struct VariantSpec {
  std::string id;
  std::vector<VariantTerm> terms;  // claim: S(n+p,k) == Sum S(n+dn, k+dk) (mod p)
};

// The scanned family: "claimed" = the shift rule above; "shifted" =
// S(n+p,k) == S(n+1,k) + S(n,k-p) (mod p).
std::vector<VariantSpec> default_touchard_variants();

std::vector<CongruenceReport> touchard_variant_scan(
    const std::vector<long>& p_list, int n_max, const StirlingTriangle& tri,
    const std::vector<VariantSpec>& variants = default_touchard_variants());

// Claimed factorial step (k'+p-1)! == -k'! (mod p) for 0 <= k' < p.  The
// counterexample field n holds k'.
CongruenceReport wilson_step_check(long p);

// Claimed pair A_{n+p} == A_n and A_{n+p} == 2^p A_n (mod p) for
// 0 <= n <= n_max; counterexample notes distinguish "identity-form" from
// "doubling-form".  The oracle must extend to n_max + p.
CongruenceReport an_congruence_check(long p, int n_max,
                                     const ZigzagTable& oracle);

// Minimal (preperiod, period) of A_n mod modulus over n <= n_max.  A pair is
// certified only when the verified window n in [preperiod, n_max - period]
// covers at least two full periods; otherwise the verdict is "vacuous" with
// the residue prefix attached.
PeriodReport period_finder(long modulus, int n_max, const ZigzagTable& oracle);

// Probe of the refined mod-p^2 shift structure.  Its correction coefficients
// have no defining formula, so only the necessary condition
// p | (A_{n+p} - 2^p A_n) is testable; where it holds the implied correction
// residue is recorded, where it fails the tuple is recorded as incompatible.
CongruenceReport mod_p2_residue_probe(long p, int n_max,
                                      const ZigzagTable& oracle);

// Standalone residue fact used as a spot check: A_7 mod 9 == 2.
bool a7_mod9_residue_check(const ZigzagTable& oracle);

}  // namespace zigzag
