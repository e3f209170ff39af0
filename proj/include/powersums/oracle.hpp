#pragma once

#include <vector>

#include "powersums/unipoly.hpp"

namespace powersums {

// Ground truth by direct big-integer summation: 1^k + 2^k + ... + n^k,
// with n = 0 giving the empty sum.  Deliberately naive.
mpz_class brute_force_sum(unsigned k, unsigned long n);

struct SweepMismatch {
  unsigned long n;
  mpz_class expected;
  Rational got;
};

// Result of sweeping a candidate closed form against the brute-force sums.
// A passing sweep has an empty mismatch list.
struct SweepReport {
  unsigned k;
  unsigned long n_max;
  std::vector<SweepMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Evaluates p at every n in 0..n_max and compares with brute_force_sum(k, n);
// a match requires the value to be an exact integer equal to the sum.
// Mismatches are data, not errors.  With jobs > 1 the sweep is split into
// disjoint ranges evaluated concurrently and the reports merged.
SweepReport verify_poly(unsigned k, const UniPoly& p, unsigned long n_max, unsigned jobs = 1);

}  // namespace powersums
