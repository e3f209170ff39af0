#pragma once

#include <map>
#include <optional>
#include <utility>

#include "powersums/rational.hpp"
#include "powersums/unipoly.hpp"

namespace powersums {

// Sparse bivariate polynomial over Rational in the variables (x, y).
// Throughout the engine x stands for S_1(n) and y for S_2(n), so a term
// x^a y^b corresponds to a polynomial of degree 2a + 3b in n; that weight is
// what weighted_degree() reports.  Canonical sparse form as in UniPoly.
class BiPoly {
 public:
  // (x exponent, y exponent); the map's pair ordering is lexicographic.
  using Exponents = std::pair<unsigned, unsigned>;
  using TermMap = std::map<Exponents, Rational>;

  BiPoly() = default;

  static BiPoly constant(const Rational& c) { return monomial(c, 0, 0); }

  static BiPoly monomial(const Rational& c, unsigned a, unsigned b) {
    BiPoly p;
    p.add_term(a, b, c);
    return p;
  }

  static BiPoly x() { return monomial(Rational(1), 1, 0); }
  static BiPoly y() { return monomial(Rational(1), 0, 1); }

  bool is_zero() const { return terms_.empty(); }

  // Maximum of 2a + 3b over stored terms; disengaged for the zero polynomial.
  std::optional<unsigned> weighted_degree() const;

  // Degree in x alone; disengaged for the zero polynomial.
  std::optional<unsigned> x_degree() const;

  Rational coefficient(unsigned a, unsigned b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Rational() : it->second;
  }

  Rational constant_term() const { return coefficient(0, 0); }

  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  BiPoly operator-() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  BiPoly& operator*=(const Rational& s);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly p, const Rational& s) { return p *= s; }
  friend BiPoly operator*(const Rational& s, BiPoly p) { return p *= s; }

  BiPoly pow(unsigned e) const;

  // g(xs(n), ys(n)) as an exact UniPoly, evaluated by Horner in y then x.
  UniPoly substitute(const UniPoly& xs, const UniPoly& ys) const;

  Rational evaluate(const Rational& xv, const Rational& yv) const;

  // Partial derivative with respect to x.
  BiPoly derivative_x() const;

  bool operator==(const BiPoly&) const = default;

  void add_term(unsigned a, unsigned b, const Rational& c);

 private:
  TermMap terms_;
};

// Exact division with leading terms taken in the map's lexicographic order;
// std::nullopt when q does not divide p, std::domain_error when q is zero.
std::optional<BiPoly> divide_exact(const BiPoly& p, const BiPoly& q);

// Scales to primitive integer coefficients and makes the coefficient of the
// lexicographically largest term positive; zero maps to zero.
BiPoly primitive_part(const BiPoly& p);

// Greatest common divisor, computed by a primitive pseudo-remainder sequence
// in x over Q[y] and returned in primitive_part normalization.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

}  // namespace powersums
