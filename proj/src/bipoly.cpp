#include "powersums/bipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace powersums {

void BiPoly::add_term(unsigned a, unsigned b, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(Exponents{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<unsigned> BiPoly::weighted_degree() const {
  if (terms_.empty()) return std::nullopt;
  unsigned best = 0;
  for (const auto& [ab, c] : terms_) best = std::max(best, 2 * ab.first + 3 * ab.second);
  return best;
}

std::optional<unsigned> BiPoly::x_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.first;  // lexicographic order puts the largest x power last
}

BiPoly BiPoly::operator-() const {
  BiPoly out;
  for (const auto& [ab, c] : terms_) out.terms_.emplace(ab, -c);
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [ab, c] : o.terms_) add_term(ab.first, ab.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [ab, c] : o.terms_) add_term(ab.first, ab.second, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [ab, c] : terms_) c *= s;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly out = constant(Rational(1));
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

namespace {

// Horner evaluation of a sparse coefficient row exp -> c at a polynomial
// argument: sum_e c_e * arg^e.
UniPoly horner_row(const std::map<unsigned, Rational>& row, const UniPoly& arg) {
  UniPoly acc;
  unsigned prev = 0;
  bool first = true;
  for (auto it = row.rbegin(); it != row.rend(); ++it) {
    if (!first) acc = acc * arg.pow(prev - it->first);
    acc += UniPoly::constant(it->second);
    prev = it->first;
    first = false;
  }
  if (!first) acc = acc * arg.pow(prev);
  return acc;
}

}  // namespace

UniPoly BiPoly::substitute(const UniPoly& xs, const UniPoly& ys) const {
  // Rows by y power, each a sparse polynomial in x.
  std::map<unsigned, std::map<unsigned, Rational>> rows;
  for (const auto& [ab, c] : terms_) rows[ab.second][ab.first] = c;

  UniPoly acc;
  unsigned prev = 0;
  bool first = true;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (!first) acc = acc * ys.pow(prev - it->first);
    acc += horner_row(it->second, xs);
    prev = it->first;
    first = false;
  }
  if (!first) acc = acc * ys.pow(prev);
  return acc;
}

Rational BiPoly::evaluate(const Rational& xv, const Rational& yv) const {
  Rational result;
  for (const auto& [ab, c] : terms_) result += c * xv.pow(ab.first) * yv.pow(ab.second);
  return result;
}

BiPoly BiPoly::derivative_x() const {
  BiPoly out;
  for (const auto& [ab, c] : terms_)
    if (ab.first > 0) out.add_term(ab.first - 1, ab.second, c * Rational(static_cast<long>(ab.first)));
  return out;
}

std::optional<BiPoly> divide_exact(const BiPoly& p, const BiPoly& q) {
  if (q.is_zero()) throw std::domain_error("divide_exact: division by the zero polynomial");
  const auto& [qe, qc] = *q.terms().rbegin();
  BiPoly remainder = p;
  BiPoly quotient;
  while (!remainder.is_zero()) {
    const auto& [re, rc] = *remainder.terms().rbegin();
    if (re.first < qe.first || re.second < qe.second) return std::nullopt;
    BiPoly t = BiPoly::monomial(rc / qc, re.first - qe.first, re.second - qe.second);
    quotient += t;
    remainder -= t * q;
  }
  return quotient;
}

BiPoly primitive_part(const BiPoly& p) {
  if (p.is_zero()) return p;
  mpz_class lcm_den(1);
  for (const auto& [ab, c] : p.terms())
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
  mpz_class content(0);
  for (const auto& [ab, c] : p.terms()) {
    mpz_class scaled = c.numerator() * (lcm_den / c.denominator());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational scale(lcm_den, content);
  if ((p.terms().rbegin()->second * scale).sign() < 0) scale = -scale;
  return p * scale;
}

namespace {

// A bivariate polynomial viewed as a polynomial in x whose coefficients are
// univariate polynomials in y.
using XPoly = std::vector<UniPoly>;

void xpoly_trim(XPoly& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

XPoly to_xpoly(const BiPoly& p) {
  XPoly out(p.is_zero() ? 0 : *p.x_degree() + 1);
  for (const auto& [ab, c] : p.terms()) out[ab.first].add_term(ab.second, c);
  return out;
}

BiPoly from_xpoly(const XPoly& v) {
  BiPoly out;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (const auto& [b, c] : v[a].terms()) out.add_term(static_cast<unsigned>(a), b, c);
  return out;
}

UniPoly xpoly_content(const XPoly& v) {
  UniPoly g;
  for (const auto& c : v) g = gcd(g, c);
  return g;
}

XPoly xpoly_primitive(XPoly v) {
  xpoly_trim(v);
  const UniPoly c = xpoly_content(v);
  if (c.is_zero() || c == UniPoly::constant(Rational(1))) return v;
  for (auto& coeff : v) {
    auto q = divide_exact(coeff, c);
    if (!q) throw std::logic_error("xpoly_primitive: content does not divide");
    coeff = std::move(*q);
  }
  return v;
}

// Pseudo-remainder in x: repeatedly scales by b's leading coefficient so the
// reduction stays inside Q[y].
XPoly xpoly_pseudo_rem(XPoly a, const XPoly& b) {
  xpoly_trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const UniPoly la = a.back();
    const UniPoly& lb = b.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& coeff : a) coeff = coeff * lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= la * b[j];
    xpoly_trim(a);
  }
  return a;
}

}  // namespace

BiPoly gcd(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero()) return primitive_part(q);
  if (q.is_zero()) return primitive_part(p);
  XPoly a = to_xpoly(p), b = to_xpoly(q);
  const UniPoly content_gcd = gcd(xpoly_content(a), xpoly_content(b));
  a = xpoly_primitive(std::move(a));
  b = xpoly_primitive(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    XPoly r = xpoly_pseudo_rem(a, b);
    a = std::move(b);
    b = xpoly_primitive(std::move(r));
  }
  a = xpoly_primitive(std::move(a));
  for (auto& coeff : a) coeff = coeff * content_gcd;
  return primitive_part(from_xpoly(a));
}

}  // namespace powersums
