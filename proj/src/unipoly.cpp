#include "powersums/unipoly.hpp"

#include <stdexcept>

namespace powersums {

void UniPoly::add_term(unsigned exp, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UniPoly UniPoly::operator-() const {
  UniPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;  // s != 0, so no coefficient becomes zero
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly out = constant(Rational(1));
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

UniPoly UniPoly::shift_by_unit(int delta) const {
  UniPoly out;
  for (const auto& [e, c] : terms_) {
    // c (n + delta)^e = c * sum_j C(e, j) delta^(e-j) n^j
    for (unsigned j = 0; j <= e; ++j) {
      mpz_class bin;
      mpz_bin_uiui(bin.get_mpz_t(), e, j);
      if (delta < 0 && ((e - j) & 1u)) bin = -bin;
      out.add_term(j, c * Rational(bin));
    }
  }
  return out;
}

Rational UniPoly::evaluate(const Rational& v) const {
  Rational result;
  Rational power(1);
  unsigned current = 0;
  for (const auto& [e, c] : terms_) {
    power *= v.pow(e - current);
    current = e;
    result += c * power;
  }
  return result;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& p, const UniPoly& q) {
  if (q.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
  UniPoly quotient;
  UniPoly remainder = p;
  const unsigned dq = *q.degree();
  const Rational lq = q.leading_coefficient();
  while (!remainder.is_zero() && *remainder.degree() >= dq) {
    const unsigned e = *remainder.degree() - dq;
    const Rational c = remainder.leading_coefficient() / lq;
    const UniPoly t = UniPoly::monomial(c, e);
    quotient += t;
    remainder -= t * q;
  }
  return {quotient, remainder};
}

std::optional<UniPoly> divide_exact(const UniPoly& p, const UniPoly& q) {
  auto [quotient, remainder] = divmod(p, q);
  if (!remainder.is_zero()) return std::nullopt;
  return quotient;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.is_zero()) x *= x.leading_coefficient().inverse();
  return x;
}

}  // namespace powersums
