#pragma once

#include <map>
#include <optional>
#include <utility>

#include "powersums/rational.hpp"

namespace powersums {

// Sparse univariate polynomial over Rational, written in the variable n.
// Canonical sparse form: no zero coefficient is ever stored, so structural
// equality coincides with mathematical equality.  The zero polynomial has an
// empty term map; its degree is a disengaged optional rather than a fake
// exponent.
class UniPoly {
 public:
  using TermMap = std::map<unsigned, Rational>;

  UniPoly() = default;

  static UniPoly constant(const Rational& c) { return monomial(c, 0); }

  static UniPoly monomial(const Rational& c, unsigned exp) {
    UniPoly p;
    p.add_term(exp, c);
    return p;
  }

  // The polynomial n itself.
  static UniPoly variable() { return monomial(Rational(1), 1); }

  bool is_zero() const { return terms_.empty(); }

  std::optional<unsigned> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }

  Rational coefficient(unsigned exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational() : it->second;
  }

  Rational leading_coefficient() const {
    return terms_.empty() ? Rational() : terms_.rbegin()->second;
  }

  Rational constant_term() const { return coefficient(0); }

  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  UniPoly operator-() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  UniPoly& operator*=(const Rational& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly p, const Rational& s) { return p *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly p) { return p *= s; }

  UniPoly pow(unsigned e) const;

  // Composition with n - 1: returns p(n - 1), expanded exactly.
  UniPoly shift_minus_one() const { return shift_by_unit(-1); }
  // Composition with n + 1, the inverse of shift_minus_one.
  UniPoly shift_plus_one() const { return shift_by_unit(+1); }

  Rational evaluate(const Rational& v) const;

  bool operator==(const UniPoly&) const = default;

  // Adds c * n^exp, dropping the entry if the sum cancels.
  void add_term(unsigned exp, const Rational& c);

 private:
  UniPoly shift_by_unit(int delta) const;

  TermMap terms_;
};

// Quotient and remainder of polynomial long division (q must be nonzero;
// throws std::domain_error otherwise).
std::pair<UniPoly, UniPoly> divmod(const UniPoly& p, const UniPoly& q);

// Exact division: the quotient u with p = q * u, or std::nullopt when the
// remainder is nonzero.  Throws std::domain_error when q is zero.
std::optional<UniPoly> divide_exact(const UniPoly& p, const UniPoly& q);

// Monic greatest common divisor over the rationals; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

}  // namespace powersums
