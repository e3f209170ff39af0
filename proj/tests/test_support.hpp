#pragma once

// Shared helpers for the test suite: deterministic random generators and the
// handful of small closed forms the cases are written against.

#include <random>

#include "powersums/bipoly.hpp"
#include "powersums/rational.hpp"
#include "powersums/unipoly.hpp"

namespace test_support {

using powersums::BiPoly;
using powersums::Rational;
using powersums::UniPoly;

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-100, 100);
  std::uniform_int_distribution<long> den(1, 100);
  return Rational(num(rng), den(rng));
}

inline UniPoly random_unipoly(std::mt19937& rng, unsigned max_degree = 8) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<int> keep(0, 2);
  UniPoly p;
  const unsigned d = deg(rng);
  for (unsigned e = 0; e <= d; ++e)
    if (keep(rng) != 0) p.add_term(e, random_rational(rng));
  return p;
}

inline BiPoly random_bipoly(std::mt19937& rng, unsigned max_exp = 3) {
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::uniform_int_distribution<int> count(1, 6);
  BiPoly p;
  const int terms = count(rng);
  for (int i = 0; i < terms; ++i) p.add_term(exp(rng), exp(rng), random_rational(rng));
  return p;
}

// No stored zero coefficients, denominators positive and reduced.
inline bool is_canonical(const UniPoly& p) {
  for (const auto& [e, c] : p.terms()) {
    if (c.is_zero()) return false;
    if (c.denominator() <= 0) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), c.numerator().get_mpz_t(), c.denominator().get_mpz_t());
    if (g != 1) return false;
  }
  return true;
}

// Gauss's closed form n(n+1)/2.
inline UniPoly gauss_poly() {
  UniPoly p;
  p.add_term(2, Rational(1, 2));
  p.add_term(1, Rational(1, 2));
  return p;
}

// n(n+1)(2n+1)/6.
inline UniPoly square_sum_poly() {
  UniPoly p;
  p.add_term(3, Rational(1, 3));
  p.add_term(2, Rational(1, 2));
  p.add_term(1, Rational(1, 6));
  return p;
}

// n^2(n+1)^2/4.
inline UniPoly cube_sum_poly() {
  UniPoly p;
  p.add_term(4, Rational(1, 4));
  p.add_term(3, Rational(1, 2));
  p.add_term(2, Rational(1, 4));
  return p;
}

// n^5/5 + n^4/2 + n^3/3 - n/30.
inline UniPoly fourth_sum_poly() {
  UniPoly p;
  p.add_term(5, Rational(1, 5));
  p.add_term(4, Rational(1, 2));
  p.add_term(3, Rational(1, 3));
  p.add_term(1, Rational(-1, 30));
  return p;
}

}  // namespace test_support
