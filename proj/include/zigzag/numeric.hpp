#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace zigzag {

// Exact arithmetic backbone. All combinatorial tables are exact integers or
// rationals; HighFloat (50 decimal digits) is used where double-precision
// cancellation would drown the quantity being measured.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using HighFloat = boost::multiprecision::cpp_bin_float_50;

// Decimal rendering used by the JSON reports (big integers as strings).
std::string to_decimal(const BigInt& v);
// "p/q" in lowest terms, or plain "p" when the denominator is 1.
std::string to_decimal(const BigRat& v);

// 0!, 1!, ..., max_n! as exact integers.
std::vector<BigInt> factorial_table(int max_n);

// Deterministic trial-division primality check for small moduli.
bool is_prime_trial(long p);

}  // namespace zigzag
