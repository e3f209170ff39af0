#include "powersums/engine.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace powersums {

namespace {

Rational binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

// Closed forms of S_1 and S_2, the decomposition basis.
const UniPoly& basis_a() {
  static const UniPoly a = [] {
    PowerSumTable t;
    return pascal_power_sum(1, t);
  }();
  return a;
}

const UniPoly& basis_b() {
  static const UniPoly b = [] {
    PowerSumTable t;
    return pascal_power_sum(2, t);
  }();
  return b;
}

}  // namespace

const UniPoly& pascal_power_sum(unsigned k, PowerSumTable& table) {
  for (unsigned kk = 0; kk <= k; ++kk) {
    if (table.memo.count(kk)) continue;
    // (n+1)^{kk+1} - 1, then subtract the lower sums, then divide by kk+1.
    UniPoly acc;
    for (unsigned j = 1; j <= kk + 1; ++j) acc.add_term(j, binomial(kk + 1, j));
    for (unsigned l = 0; l < kk; ++l) acc -= binomial(kk + 1, l) * table.memo.at(l);
    acc *= Rational(1, static_cast<long>(kk) + 1);
    table.memo.emplace(kk, std::move(acc));
  }
  return table.memo.at(k);
}

const UniPoly& halfterm_power_sum(unsigned k, PowerSumTable& table) {
  if (k <= 2) return pascal_power_sum(k, table);
  for (unsigned kk = 3; kk <= k; ++kk) {
    if (table.memo.count(kk)) continue;
    if (kk % 2)
      odd_step((kk - 1) / 2, table);
    else
      even_step((kk - 2) / 2, table);
  }
  return table.memo.at(k);
}

LeadingCoefficients leading_coefficients(unsigned k, PowerSumTable& table) {
  if (k < 1) throw std::invalid_argument("leading_coefficients: k must be >= 1");
  const UniPoly& s = halfterm_power_sum(k, table);
  return {s.coefficient(k + 1), s.coefficient(k), s.coefficient(0)};
}

HalfTermStep odd_step(unsigned r, PowerSumTable& table) {
  if (r < 1) throw std::invalid_argument("odd_step: r must be >= 1");
  const unsigned k = 2 * r + 1;
  for (unsigned i = r; i <= 2 * r - 1; ++i) halfterm_power_sum(i, table);
  const UniPoly& sr = table.memo.at(r);

  UniPoly p = UniPoly::monomial(Rational(1), 2 * r) +
              UniPoly::monomial(Rational(2), r) * sr.shift_minus_one();

  CoeffVector cv{CoeffVector::Kind::odd, r, {}};
  for (unsigned i = r; i <= 2 * r + 1; ++i) cv.coeffs[i] = p.coefficient(i);

  // Support must lie in [r, 2r+1] with the top two coefficients forced.
  if (p.terms().begin()->first < r || *p.degree() != 2 * r + 1 ||
      cv.coeffs.at(2 * r + 1) != Rational(2, static_cast<long>(r) + 1) ||
      !cv.coeffs.at(2 * r).is_zero())
    throw std::logic_error("odd_step: expansion violates the coefficient laws");

  UniPoly acc = sr * sr;
  for (unsigned i = r; i <= 2 * r - 1; ++i) {
    const Rational& d = cv.coeffs.at(i);
    if (!d.is_zero()) acc -= d * table.memo.at(i);
  }
  acc *= Rational(static_cast<long>(r) + 1, 2);

  if (!table.memo.count(k)) table.memo.emplace(k, acc);
  return {std::move(cv), std::move(acc)};
}

HalfTermStep even_step(unsigned r, PowerSumTable& table) {
  if (r < 1) throw std::invalid_argument("even_step: r must be >= 1");
  const unsigned k = 2 * r + 2;
  for (unsigned i = r; i <= 2 * r; ++i) halfterm_power_sum(i, table);
  const UniPoly& sr = table.memo.at(r);
  const UniPoly& sr1 = table.memo.at(r + 1);

  UniPoly p = UniPoly::monomial(Rational(1), 2 * r + 1) +
              UniPoly::monomial(Rational(1), r) * sr1.shift_minus_one() +
              UniPoly::monomial(Rational(1), r + 1) * sr.shift_minus_one();

  CoeffVector cv{CoeffVector::Kind::even, r, {}};
  for (unsigned i = r + 1; i <= 2 * r + 2; ++i) cv.coeffs[i] = p.coefficient(i);

  const Rational top(2 * static_cast<long>(r) + 3,
                     (static_cast<long>(r) + 1) * (static_cast<long>(r) + 2));
  if (p.terms().begin()->first < r + 1 || *p.degree() != 2 * r + 2 ||
      cv.coeffs.at(2 * r + 2) != top || !cv.coeffs.at(2 * r + 1).is_zero())
    throw std::logic_error("even_step: expansion violates the coefficient laws");

  UniPoly acc = sr * sr1;
  for (unsigned i = r + 1; i <= 2 * r; ++i) {
    const Rational& e = cv.coeffs.at(i);
    if (!e.is_zero()) acc -= e * table.memo.at(i);
  }
  acc *= top.inverse();

  if (!table.memo.count(k)) table.memo.emplace(k, acc);
  return {std::move(cv), std::move(acc)};
}

const BiPoly& g_poly(unsigned k, PowerSumTable& table) {
  if (k < 1) throw std::invalid_argument("g_poly: k must be >= 1");
  for (unsigned kk = 1; kk <= k; ++kk) {
    if (table.gmemo.count(kk)) continue;
    BiPoly g;
    if (kk == 1) {
      g = BiPoly::x();
    } else if (kk == 2) {
      g = BiPoly::y();
    } else if (kk % 2) {
      const unsigned r = (kk - 1) / 2;
      const HalfTermStep step = odd_step(r, table);
      g = table.gmemo.at(r) * table.gmemo.at(r);
      for (unsigned i = r; i <= 2 * r - 1; ++i) {
        const Rational& d = step.expansion.coeffs.at(i);
        if (!d.is_zero()) g -= d * table.gmemo.at(i);
      }
      g *= Rational(static_cast<long>(r) + 1, 2);
    } else {
      const unsigned r = (kk - 2) / 2;
      const HalfTermStep step = even_step(r, table);
      g = table.gmemo.at(r) * table.gmemo.at(r + 1);
      for (unsigned i = r + 1; i <= 2 * r; ++i) {
        const Rational& e = step.expansion.coeffs.at(i);
        if (!e.is_zero()) g -= e * table.gmemo.at(i);
      }
      g *= Rational((static_cast<long>(r) + 1) * (static_cast<long>(r) + 2),
                    2 * static_cast<long>(r) + 3);
    }
    if (!g.constant_term().is_zero())
      throw std::logic_error("g_poly: construction produced a nonzero constant term");
    table.gmemo.emplace(kk, std::move(g));
  }
  return table.gmemo.at(k);
}

DecompResult decompose_pure_a(const UniPoly& input) {
  UniPoly p = input;
  BiPoly acc;
  while (!p.is_zero()) {
    const unsigned d = *p.degree();
    if (d < 2 || d % 2 != 0) return {DecompResult::Status::obstructed, {}, p};
    const unsigned a = d / 2;
    const Rational alpha = p.leading_coefficient() * Rational(2).pow(a);
    acc.add_term(a, 0, alpha);
    p -= alpha * basis_a().pow(a);
  }
  return {DecompResult::Status::success, acc, {}};
}

DecompResult decompose_greedy_ab(const UniPoly& input) {
  if (!input.constant_term().is_zero())
    throw std::invalid_argument("decompose_greedy_ab: input must have zero constant term");
  UniPoly p = input;
  BiPoly acc;
  while (!p.is_zero()) {
    const unsigned d = *p.degree();
    if (d < 2) return {DecompResult::Status::obstructed, {}, p};
    // Canonical exponent choice for degree d: smallest y power that fits.
    const unsigned b = d % 2;
    const unsigned a = (d - 3 * b) / 2;
    const Rational alpha = p.leading_coefficient() * Rational(2).pow(a) * Rational(3).pow(b);
    acc.add_term(a, b, alpha);
    p -= alpha * (basis_a().pow(a) * basis_b().pow(b));
  }
  return {DecompResult::Status::success, acc, {}};
}

BiPoly faulhaber_in_a(unsigned k, PowerSumTable& table) {
  if (k % 2 == 0) throw std::invalid_argument("faulhaber_in_a: k must be odd");
  const UniPoly& s = halfterm_power_sum(k, table);
  DecompResult r = decompose_pure_a(s);
  if (!r.ok())
    throw std::logic_error("faulhaber_in_a: obstruction on an odd power sum");
  return r.value;
}

BiPoly faulhaber_even_factor(unsigned k, PowerSumTable& table) {
  if (k < 2 || k % 2) throw std::invalid_argument("faulhaber_even_factor: k must be even and >= 2");
  const UniPoly& s = halfterm_power_sum(k, table);
  const UniPoly& b = halfterm_power_sum(2, table);
  auto q = divide_exact(s, b);
  if (!q) throw std::logic_error("faulhaber_even_factor: power sum not divisible by S_2");
  // The quotient may carry a constant; everything above it must peel as pure
  // powers of S_1.
  const Rational c0 = q->constant_term();
  UniPoly reduced = *q;
  reduced.add_term(0, -c0);
  DecompResult r = decompose_pure_a(reduced);
  if (!r.ok())
    throw std::logic_error("faulhaber_even_factor: quotient not expressible in S_1");
  BiPoly qx = r.value;
  qx.add_term(0, 0, c0);
  return qx * BiPoly::y();
}

TermCountReport term_count_report(unsigned k) {
  if (k < 3) throw std::invalid_argument("term_count_report: k must be >= 3");
  // The telescoped binomial identity consults S_0..S_{k-1}.  The half-index
  // identity consults its subtraction-sum terms plus the distinct product
  // factors: for odd k = 2r+1 the r sums S_r..S_{2r-1} and the squared S_r;
  // for even k = 2r+2 the r sums S_{r+1}..S_{2r} and the product S_r S_{r+1}.
  const unsigned r = (k % 2) ? (k - 1) / 2 : (k - 2) / 2;
  return {k, (k % 2) ? r + 1 : r + 2};
}

// --- relation polynomials -------------------------------------------------

namespace {

// S_k(n) - v with denominators cleared, as dense n-coefficients over Z[x, y];
// v is the variable x or y.
std::vector<BiPoly> cleared_power_sum_minus(const UniPoly& s, bool subtract_x) {
  mpz_class lcm_den(1);
  for (const auto& [e, c] : s.terms())
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
  const Rational scale(lcm_den);

  std::vector<BiPoly> out(*s.degree() + 1);
  for (const auto& [e, c] : s.terms()) out[e] = BiPoly::constant(c * scale);
  out[0] -= (subtract_x ? BiPoly::x() : BiPoly::y()) * scale;
  return out;
}

// Fraction-free determinant (Bareiss) with row pivoting; every division is
// exact over Z[x, y].
BiPoly bareiss_determinant(std::vector<std::vector<BiPoly>> m) {
  const std::size_t n = m.size();
  bool negate = false;
  BiPoly prev = BiPoly::constant(Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return BiPoly();
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto q = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        if (!q) throw std::logic_error("bareiss_determinant: non-exact division");
        m[i][j] = std::move(*q);
      }
      m[i][k] = BiPoly();
    }
    prev = m[k][k];
  }
  BiPoly det = m[n - 1][n - 1];
  if (negate) det = -det;
  return det;
}

// Drops repeated factors: T / gcd(T, dT/dx).  Every irreducible factor of a
// power-sum resultant depends on x, so this is a genuine squarefree part
// there.
BiPoly squarefree_part(const BiPoly& t) {
  if (t.is_zero()) return t;
  if (*t.x_degree() == 0)
    throw std::logic_error("squarefree_part: polynomial is constant in x");
  const BiPoly g = gcd(t, t.derivative_x());
  auto q = divide_exact(t, g);
  if (!q) throw std::logic_error("squarefree_part: gcd does not divide");
  return *q;
}

}  // namespace

BiPoly power_sum_resultant(unsigned i, unsigned j, PowerSumTable& table) {
  if (i < 1 || j < 1) throw std::invalid_argument("power_sum_resultant: indices must be >= 1");
  if (i == j) throw std::invalid_argument("power_sum_resultant: indices must differ");
  const std::vector<BiPoly> p = cleared_power_sum_minus(halfterm_power_sum(i, table), true);
  const std::vector<BiPoly> q = cleared_power_sum_minus(halfterm_power_sum(j, table), false);
  const std::size_t dp = p.size() - 1;
  const std::size_t dq = q.size() - 1;

  // Sylvester matrix: dq rows of shifted p coefficients, dp rows of shifted q.
  std::vector<std::vector<BiPoly>> m(dp + dq, std::vector<BiPoly>(dp + dq));
  for (std::size_t t = 0; t < dq; ++t)
    for (std::size_t c = 0; c <= dp; ++c) m[t][t + c] = p[dp - c];
  for (std::size_t t = 0; t < dp; ++t)
    for (std::size_t c = 0; c <= dq; ++c) m[dq + t][t + c] = q[dq - c];

  BiPoly det = bareiss_determinant(std::move(m));
  if (det.is_zero())
    throw std::logic_error("power_sum_resultant: resultant vanished identically");
  return primitive_part(det);
}

BiPoly relation_polynomial(unsigned i, unsigned j, PowerSumTable& table) {
  return primitive_part(squarefree_part(power_sum_resultant(i, j, table)));
}

}  // namespace powersums
