#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace spda {

/// Arbitrary-precision integer and exact rational, used wherever parameter
/// formulas must not round (memory ratios, rates, bounds, big binomials).
using Int = mpz_class;
using Rat = mpq_class;

/// C(n, k) exactly. Out-of-range k (k < 0 or k > n) yields 0, which keeps
/// difference-of-binomials formulas total. Negative n is an error.
Int binomial(long n, long k);

/// C(n, k) narrowed to int64, for index arithmetic at small scales.
int64_t binomial64(int n, int k);

/// num/den in lowest terms. den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

/// Fixed-point decimal rendering, rounding half away from zero.
/// decimal_string(4/7, 5) == "0.57143".
std::string decimal_string(const Rat& value, int places);

/// Round value up to the nearest integer.
Int ceil_rat(const Rat& value);

int64_t to_int64(const Int& value);

/// log10 of a positive integer, as a double.
double log10_int(const Int& value);

} // namespace spda
