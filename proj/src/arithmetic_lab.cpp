#include "zigzag/arithmetic_lab.hpp"

#include <algorithm>

#include "zigzag/errors.hpp"

namespace zigzag {

namespace {

void require_prime(long p) {
  if (p < 2 || p > kMaxPrime || !is_prime_trial(p)) {
    throw ContractError("not-prime",
                        "modulus must be a prime in [2, 10000], got " + std::to_string(p));
  }
}

void push_counterexample(CongruenceReport& rep, Counterexample ce) {
  ++rep.total_counterexamples;
  if (rep.counterexamples.size() <
      static_cast<size_t>(kCounterexampleCap)) {
    rep.counterexamples.push_back(std::move(ce));
  }
}

void finish_verdict(CongruenceReport& rep) {
  rep.verdict = rep.total_counterexamples > 0 ? "fails" : "holds_on_grid";
  if (rep.tested == 0) rep.verdict = "vacuous";
}

}  // namespace

long reduce_mod(const BigInt& v, long m) {
  BigInt r = v % m;
  long out = r.convert_to<long>() % m;
  return ((out % m) + m) % m;
}

CongruenceReport touchard_claim_check(long p, int n_max,
                                      const StirlingTriangle& tri) {
  require_prime(p);
  if (n_max < p) {
    throw ContractError("invalid-argument", "grid must extend to at least n = p");
  }
  if (tri.max_n < n_max + p) {
    throw ContractError("range-exceeded",
                        "triangle must extend to n_max + p rows");
  }
  CongruenceReport rep;
  rep.claim = {"touchard_claimed", p, n_max};
  for (long n = 1; n <= n_max; ++n) {
    for (long k = 0; k <= n + p; ++k) {
      const long lhs = reduce_mod(tri.value_or_zero(n + p, k), p);
      const long rhs = reduce_mod(
          tri.value_or_zero(n, k) + tri.value_or_zero(n, k - p + 1), p);
      ++rep.tested;
      if (lhs != rhs) {
        push_counterexample(rep, {n, k, lhs, rhs, ""});
      }
    }
  }
  finish_verdict(rep);
  return rep;
}

std::vector<VariantSpec> default_touchard_variants() {
  return {
      {"claimed", {{0, 0, 0}, {0, 1, -1}}},   // S(n,k) + S(n,k-p+1)
      {"shifted", {{1, 0, 0}, {0, 0, -1}}},   // S(n+1,k) + S(n,k-p)
  };
}

std::vector<CongruenceReport> touchard_variant_scan(
    const std::vector<long>& p_list, int n_max, const StirlingTriangle& tri,
    const std::vector<VariantSpec>& variants) {
  std::vector<CongruenceReport> out;
  for (long p : p_list) {
    require_prime(p);
    if (tri.max_n < n_max + p) {
      throw ContractError("range-exceeded",
                          "triangle must extend to n_max + p rows");
    }
    for (const VariantSpec& v : variants) {
      CongruenceReport rep;
      rep.claim = {"touchard_variant:" + v.id, p, n_max};
      for (long n = 1; n <= n_max; ++n) {
        for (long k = 0; k <= n + p; ++k) {
          const long lhs = reduce_mod(tri.value_or_zero(n + p, k), p);
          BigInt rhs_exact = 0;
          for (const VariantTerm& t : v.terms) {
            rhs_exact += tri.value_or_zero(n + t.dn,
                                           k + t.dk_const + t.dk_p * p);
          }
          const long rhs = reduce_mod(rhs_exact, p);
          ++rep.tested;
          if (lhs != rhs) {
            push_counterexample(rep, {n, k, lhs, rhs, ""});
          }
        }
      }
      finish_verdict(rep);
      out.push_back(std::move(rep));
    }
  }
  return out;
}

CongruenceReport wilson_step_check(long p) {
  require_prime(p);
  CongruenceReport rep;
  rep.claim = {"wilson_step", p, p - 1};
  // Factorial residues 0! .. (2p-2)! mod p, built incrementally.
  std::vector<long> fact_mod(static_cast<size_t>(2 * p - 1));
  fact_mod[0] = 1 % p;
  for (long i = 1; i <= 2 * p - 2; ++i) {
    fact_mod[static_cast<size_t>(i)] =
        (fact_mod[static_cast<size_t>(i - 1)] * (i % p)) % p;
  }
  for (long kp = 0; kp < p; ++kp) {
    const long lhs = fact_mod[static_cast<size_t>(kp + p - 1)];
    const long rhs = ((p - fact_mod[static_cast<size_t>(kp)]) % p + p) % p;
    ++rep.tested;
    if (lhs != rhs) {
      push_counterexample(rep, {kp, -1, lhs, rhs, "k-prime-index"});
    }
  }
  finish_verdict(rep);
  return rep;
}

CongruenceReport an_congruence_check(long p, int n_max,
                                     const ZigzagTable& oracle) {
  require_prime(p);
  if (oracle.max_index < n_max + p) {
    throw ContractError("range-exceeded",
                        "oracle must extend to n_max + p entries");
  }
  CongruenceReport rep;
  rep.claim = {"prime_shift", p, n_max};
  const long two_p = reduce_mod(BigInt(1) << p, p);
  for (long n = 0; n <= n_max; ++n) {
    const long lhs = reduce_mod(oracle.at(static_cast<int>(n + p)), p);
    const long identity_rhs = reduce_mod(oracle.at(static_cast<int>(n)), p);
    const long doubling_rhs = (identity_rhs * two_p) % p;
    ++rep.tested;
    if (lhs != identity_rhs) {
      push_counterexample(rep, {n, -1, lhs, identity_rhs, "identity-form"});
    }
    ++rep.tested;
    if (lhs != doubling_rhs) {
      push_counterexample(rep, {n, -1, lhs, doubling_rhs, "doubling-form"});
    }
  }
  finish_verdict(rep);
  return rep;
}

PeriodReport period_finder(long modulus, int n_max, const ZigzagTable& oracle) {
  if (modulus < 2) {
    throw ContractError("invalid-argument", "modulus must be >= 2");
  }
  if (n_max < 4 * modulus) {
    throw ContractError("insufficient-range",
                        "period scan needs n_max >= 4 * modulus");
  }
  if (oracle.max_index < n_max) {
    throw ContractError("range-exceeded", "oracle table too small for scan");
  }

  std::vector<long> residues(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) residues[static_cast<size_t>(n)] = reduce_mod(oracle.at(n), modulus);

  PeriodReport rep;
  rep.modulus = modulus;
  const size_t prefix_len = std::min<size_t>(residues.size(), 32);
  rep.residue_prefix.assign(residues.begin(),
                            residues.begin() + static_cast<long>(prefix_len));

  for (long period = 1; period <= n_max / 2; ++period) {
    // Minimal preperiod for this period: one past the last mismatch.
    long preperiod = 0;
    for (long n = n_max - period; n >= 0; --n) {
      if (residues[static_cast<size_t>(n + period)] !=
          residues[static_cast<size_t>(n)]) {
        preperiod = n + 1;
        break;
      }
    }
    const long window = n_max - period - preperiod + 1;
    if (window >= 2 * period) {
      rep.preperiod = preperiod;
      rep.period = period;
      rep.verdict = "certified";
      for (long i = 0; i < period; ++i) {
        rep.residue_cycle.push_back(residues[static_cast<size_t>(preperiod + i)]);
      }
      return rep;
    }
  }
  rep.verdict = "vacuous";
  return rep;
}

CongruenceReport mod_p2_residue_probe(long p, int n_max,
                                      const ZigzagTable& oracle) {
  require_prime(p);
  if (p == 2) {
    throw ContractError("even-prime-rejected", "probe requires an odd prime");
  }
  if (oracle.max_index < n_max + p) {
    throw ContractError("range-exceeded",
                        "oracle must extend to n_max + p entries");
  }
  CongruenceReport rep;
  rep.claim = {"mod_p2_probe", p, n_max};
  const BigInt two_p = BigInt(1) << p;
  for (long n = 0; n <= n_max; ++n) {
    const BigInt diff = oracle.at(static_cast<int>(n + p)) -
                        two_p * oracle.at(static_cast<int>(n));
    ++rep.tested;
    const long dm = reduce_mod(diff, p);
    if (dm == 0) {
      const BigInt quotient = diff / p;
      rep.implied_residues.emplace_back(n, reduce_mod(quotient, p));
    } else {
      push_counterexample(rep, {n, -1, dm, 0, "shift-difference-not-divisible"});
    }
  }
  finish_verdict(rep);
  return rep;
}

bool a7_mod9_residue_check(const ZigzagTable& oracle) {
  if (oracle.max_index < 7) {
    throw ContractError("range-exceeded", "oracle must extend to index 7");
  }
  return reduce_mod(oracle.at(7), 9) == 2;
}

}  // namespace zigzag
