#include <doctest.h>

#include <random>

#include "powersums/oracle.hpp"
#include "powersums/unipoly.hpp"
#include "test_support.hpp"

using powersums::brute_force_sum;
using powersums::divide_exact;
using powersums::divmod;
using powersums::Rational;
using powersums::UniPoly;
using test_support::cube_sum_poly;
using test_support::fourth_sum_poly;
using test_support::gauss_poly;
using test_support::is_canonical;
using test_support::random_rational;
using test_support::random_unipoly;
using test_support::square_sum_poly;

TEST_CASE("zero polynomial basics") {
  UniPoly z;
  CHECK(z.is_zero());
  CHECK(!z.degree().has_value());
  CHECK(z.term_count() == 0);
  CHECK(z.evaluate(Rational(123, 7)) == Rational(0));
  CHECK(UniPoly::monomial(Rational(0), 5) == z);
}

TEST_CASE("addition") {
  const UniPoly n2 = UniPoly::monomial(Rational(1), 2);
  CHECK((n2 + (-n2)).is_zero());

  UniPoly doubled = gauss_poly() + gauss_poly();
  UniPoly expected;
  expected.add_term(2, Rational(1));
  expected.add_term(1, Rational(1));
  CHECK(doubled == expected);

  // sum of the first two power-sum closed forms, checked against direct sums
  UniPoly s12 = gauss_poly() + square_sum_poly();
  UniPoly frozen;
  frozen.add_term(3, Rational(1, 3));
  frozen.add_term(2, Rational(1));
  frozen.add_term(1, Rational(2, 3));
  CHECK(s12 == frozen);
  for (unsigned long n = 1; n <= 5; ++n) {
    const mpz_class want = brute_force_sum(1, n) + brute_force_sum(2, n);
    CHECK(s12.evaluate(Rational(mpz_class(n))) == Rational(want));
  }
}

TEST_CASE("multiplication") {
  CHECK((gauss_poly() * UniPoly()).is_zero());
  CHECK(gauss_poly() * gauss_poly() == cube_sum_poly());

  const Rational at3 = (gauss_poly() * square_sum_poly()).evaluate(Rational(3));
  CHECK(at3 == Rational(84));  // 6 * 14
  CHECK(Rational(mpz_class(brute_force_sum(1, 3) * brute_force_sum(2, 3))) == at3);
}

TEST_CASE("shift by minus one") {
  CHECK(UniPoly::variable().shift_minus_one() ==
        UniPoly::variable() - UniPoly::constant(Rational(1)));

  UniPoly gauss_shifted;
  gauss_shifted.add_term(2, Rational(1, 2));
  gauss_shifted.add_term(1, Rational(-1, 2));
  CHECK(gauss_poly().shift_minus_one() == gauss_shifted);

  UniPoly sq_shifted;
  sq_shifted.add_term(3, Rational(1, 3));
  sq_shifted.add_term(2, Rational(-1, 2));
  sq_shifted.add_term(1, Rational(1, 6));
  const UniPoly shifted = square_sum_poly().shift_minus_one();
  CHECK(shifted == sq_shifted);
  for (long n = 1; n <= 6; ++n)
    CHECK(shifted.evaluate(Rational(n)) == square_sum_poly().evaluate(Rational(n - 1)));
}

TEST_CASE("evaluation") {
  CHECK(UniPoly().evaluate(Rational(99)) == Rational(0));
  CHECK(gauss_poly().evaluate(Rational(100)) == Rational(5050));
  CHECK(square_sum_poly().evaluate(Rational(4)) == Rational(30));
  CHECK(gauss_poly().evaluate(Rational(-1, 2)) == Rational(-1, 8));
}

TEST_CASE("exact division") {
  UniPoly p;  // n^2 - 1
  p.add_term(2, Rational(1));
  p.add_term(0, Rational(-1));
  UniPoly q;  // n - 1
  q.add_term(1, Rational(1));
  q.add_term(0, Rational(-1));
  auto quotient = divide_exact(p, q);
  REQUIRE(quotient.has_value());
  UniPoly expected;
  expected.add_term(1, Rational(1));
  expected.add_term(0, Rational(1));
  CHECK(*quotient == expected);

  // the fourth power sum divided by the second
  auto f = divide_exact(fourth_sum_poly(), square_sum_poly());
  REQUIRE(f.has_value());
  UniPoly frozen;
  frozen.add_term(2, Rational(3, 5));
  frozen.add_term(1, Rational(3, 5));
  frozen.add_term(0, Rational(-1, 5));
  CHECK(*f == frozen);
  for (long n = 1; n <= 6; ++n)
    CHECK(f->evaluate(Rational(n)) * square_sum_poly().evaluate(Rational(n)) ==
          fourth_sum_poly().evaluate(Rational(n)));

  UniPoly n2 = UniPoly::monomial(Rational(1), 2);
  UniPoly nplus1 = UniPoly::variable() + UniPoly::constant(Rational(1));
  CHECK(!divide_exact(n2, nplus1).has_value());

  CHECK_THROWS_AS(divide_exact(p, UniPoly()), std::domain_error);
  CHECK_THROWS_AS(divmod(p, UniPoly()), std::domain_error);
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(20250810);
  for (int trial = 0; trial < 60; ++trial) {
    const UniPoly p = random_unipoly(rng);
    const UniPoly q = random_unipoly(rng);
    const UniPoly r = random_unipoly(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(is_canonical(p * q));
    CHECK(is_canonical(p + q));
    CHECK(is_canonical(p - q));
  }
}

TEST_CASE("shift round trip is the identity") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 40; ++trial) {
    const UniPoly p = random_unipoly(rng);
    CHECK(p.shift_minus_one().shift_plus_one() == p);
    CHECK(p.shift_plus_one().shift_minus_one() == p);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    const UniPoly p = random_unipoly(rng, 6);
    const UniPoly q = random_unipoly(rng, 6);
    const Rational v = random_rational(rng);
    CHECK((p * q).evaluate(v) == p.evaluate(v) * q.evaluate(v));
    CHECK((p + q).evaluate(v) == p.evaluate(v) + q.evaluate(v));
  }
}

TEST_CASE("division round trip on random polynomials") {
  std::mt19937 rng(1331);
  int checked = 0;
  while (checked < 30) {
    const UniPoly p = random_unipoly(rng, 6);
    const UniPoly q = random_unipoly(rng, 4);
    if (q.is_zero()) continue;
    auto back = divide_exact(p * q, q);
    REQUIRE(back.has_value());
    CHECK(*back == p);
    if (q.degree().value_or(0) >= 1) {
      auto off = divide_exact(p * q + UniPoly::constant(Rational(1)), q);
      CHECK(!off.has_value());
    }
    ++checked;
  }
}

TEST_CASE("degree bookkeeping") {
  const UniPoly p = gauss_poly();
  CHECK(p.degree() == 2u);
  CHECK(p.leading_coefficient() == Rational(1, 2));
  CHECK(p.constant_term() == Rational(0));
  CHECK((p - p).degree() == std::nullopt);
  CHECK(p.pow(0) == UniPoly::constant(Rational(1)));
  CHECK(p.pow(3).degree() == 6u);
}

TEST_CASE("gcd over the rationals") {
  // (1/12) n^2 (n+1)^2 (2n+1) and (1/4) n^2 (n+1)^2 share n^2 (n+1)^2
  UniPoly a = gauss_poly() * square_sum_poly();
  UniPoly b = gauss_poly() * gauss_poly();
  const UniPoly g = powersums::gcd(a, b);
  UniPoly expected;  // n^4 + 2n^3 + n^2, monic
  expected.add_term(4, Rational(1));
  expected.add_term(3, Rational(2));
  expected.add_term(2, Rational(1));
  CHECK(g == expected);
  CHECK(powersums::gcd(UniPoly(), UniPoly()).is_zero());
  CHECK(powersums::gcd(a, UniPoly()) == powersums::gcd(UniPoly(), a));
}
