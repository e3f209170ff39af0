// Acceptance suite: one pass/fail line per criterion, exact rational equality
// throughout, wall-clock limits pinned in code.  Exit status is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "powersums/engine.hpp"
#include "powersums/format.hpp"
#include "powersums/oracle.hpp"

using namespace powersums;

namespace {

struct Criterion {
  int id;
  const char* label;
  double limit_seconds;
  std::function<bool(std::string&)> check;
};

BiPoly bi(std::initializer_list<std::tuple<long, unsigned, unsigned, long>> terms) {
  // (numerator, x exponent, y exponent, denominator)
  BiPoly p;
  for (const auto& [num, a, b, den] : terms) p.add_term(a, b, Rational(num, den));
  return p;
}

bool golden_g_polys(std::string& detail) {
  PowerSumTable t;
  const BiPoly g3 = bi({{1, 2, 0, 1}});
  const BiPoly g4 = bi({{6, 1, 1, 5}, {-1, 0, 1, 5}});
  const BiPoly g5 = bi({{3, 0, 2, 2}, {-1, 2, 0, 2}});
  const BiPoly g6 = bi({{12, 2, 1, 7}, {-6, 1, 1, 7}, {1, 0, 1, 7}});
  if (g_poly(3, t) != g3) { detail = "g_3 != x^2"; return false; }
  if (g_poly(4, t) != g4) { detail = "g_4 mismatch"; return false; }
  if (g_poly(5, t) != g5) { detail = "g_5 mismatch"; return false; }
  if (g_poly(6, t) != g6) { detail = "g_6 mismatch"; return false; }
  return true;
}

bool golden_faulhaber(std::string& detail) {
  PowerSumTable t;
  const BiPoly f3 = bi({{1, 2, 0, 1}});
  const BiPoly f5 = bi({{4, 3, 0, 3}, {-1, 2, 0, 3}});
  const BiPoly f7 = bi({{2, 4, 0, 1}, {-4, 3, 0, 3}, {1, 2, 0, 3}});
  if (faulhaber_in_a(3, t) != f3) { detail = "f_3 mismatch"; return false; }
  if (faulhaber_in_a(5, t) != f5) { detail = "f_5 mismatch"; return false; }
  if (faulhaber_in_a(7, t) != f7) { detail = "f_7 mismatch"; return false; }
  return true;
}

bool golden_even_factor(std::string& detail) {
  PowerSumTable t;
  const BiPoly f4 = bi({{6, 1, 1, 5}, {-1, 0, 1, 5}});
  if (faulhaber_even_factor(4, t) != f4) { detail = "even factor of S_4 mismatch"; return false; }
  const UniPoly& a = halfterm_power_sum(1, t);
  const UniPoly& b = halfterm_power_sum(2, t);
  const UniPoly product = b * (a * Rational(6, 5) - UniPoly::constant(Rational(1, 5)));
  if (product != halfterm_power_sum(4, t)) { detail = "S_4 != S_2 (6/5 S_1 - 1/5)"; return false; }
  return true;
}

bool coefficient_laws(std::string& detail) {
  PowerSumTable t;
  for (unsigned r = 1; r <= 60; ++r) {
    const HalfTermStep odd = odd_step(r, t);
    if (odd.expansion.coeffs.at(2 * r + 1) != Rational(2, static_cast<long>(r) + 1) ||
        !odd.expansion.coeffs.at(2 * r).is_zero()) {
      detail = "d law fails at r=" + std::to_string(r);
      return false;
    }
    const HalfTermStep even = even_step(r, t);
    const Rational top(2 * static_cast<long>(r) + 3,
                       (static_cast<long>(r) + 1) * (static_cast<long>(r) + 2));
    if (even.expansion.coeffs.at(2 * r + 2) != top ||
        !even.expansion.coeffs.at(2 * r + 1).is_zero()) {
      detail = "e law fails at r=" + std::to_string(r);
      return false;
    }
  }
  return true;
}

bool route_equivalence(std::string& detail) {
  PowerSumTable pascal, half;
  for (unsigned k = 0; k <= 100; ++k) {
    if (pascal_power_sum(k, pascal) != halfterm_power_sum(k, half)) {
      detail = "routes disagree at k=" + std::to_string(k);
      return false;
    }
  }
  return true;
}

bool oracle_equivalence(std::string& detail) {
  PowerSumTable t;
  const Rational gauss100 = pascal_power_sum(1, t).evaluate(Rational(100));
  if (gauss100 != Rational(5050) || brute_force_sum(1, 100) != 5050) {
    detail = "S_1(100) != 5050";
    return false;
  }
  for (unsigned k = 0; k <= 60; ++k) {
    const SweepReport r = verify_poly(k, pascal_power_sum(k, t), 200);
    if (!r.ok()) {
      detail = "sweep mismatch at k=" + std::to_string(k) +
               ", first n=" + std::to_string(r.mismatches.front().n);
      return false;
    }
  }
  return true;
}

bool theorem_contract(std::string& detail) {
  PowerSumTable t;
  const UniPoly a = halfterm_power_sum(1, t);
  const UniPoly b = halfterm_power_sum(2, t);
  for (unsigned k = 1; k <= 100; ++k) {
    const BiPoly& g = g_poly(k, t);
    if (!g.constant_term().is_zero()) {
      detail = "g_k(0,0) != 0 at k=" + std::to_string(k);
      return false;
    }
    if (g.substitute(a, b) != halfterm_power_sum(k, t)) {
      detail = "g_k(S_1, S_2) != S_k at k=" + std::to_string(k);
      return false;
    }
  }
  return true;
}

bool term_count_claim(std::string& detail) {
  for (unsigned k = 3; k <= 100; ++k) {
    const TermCountReport r = term_count_report(k);
    const unsigned bound = (k + 1) / 2 + 2;  // ceil(k/2) + 2
    if (r.pascal_terms != k || r.halfterm_terms > bound) {
      detail = "count bound fails at k=" + std::to_string(k);
      return false;
    }
  }
  return true;
}

bool greedy_decomposition(std::string& detail) {
  PowerSumTable t;
  const UniPoly a = halfterm_power_sum(1, t);
  const UniPoly b = halfterm_power_sum(2, t);
  for (unsigned k = 1; k <= 40; ++k) {
    const DecompResult r = decompose_greedy_ab(halfterm_power_sum(k, t));
    if (!r.ok()) {
      detail = "unexpected obstruction at k=" + std::to_string(k);
      return false;
    }
    if (r.value.substitute(a, b) != halfterm_power_sum(k, t)) {
      detail = "substitution mismatch at k=" + std::to_string(k);
      return false;
    }
  }
  const DecompResult linear = decompose_greedy_ab(UniPoly::variable());
  if (linear.ok() || linear.residual != UniPoly::variable()) {
    detail = "the linear obstruction was not reported";
    return false;
  }
  return true;
}

bool relation_vanishing(std::string& detail) {
  PowerSumTable t;
  const BiPoly expected13 = bi({{1, 2, 0, 1}, {-1, 0, 1, 1}});
  if (relation_polynomial(1, 3, t) != expected13) {
    detail = "T(1,3) is not x^2 - y";
    return false;
  }
  for (unsigned i = 1; i <= 4; ++i) {
    for (unsigned j = i + 1; j <= 4; ++j) {
      const BiPoly rel = relation_polynomial(i, j, t);
      if (rel.is_zero()) {
        detail = "zero relation for (" + std::to_string(i) + "," + std::to_string(j) + ")";
        return false;
      }
      if (!rel.substitute(halfterm_power_sum(i, t), halfterm_power_sum(j, t)).is_zero()) {
        detail = "T(S_i, S_j) != 0 for (" + std::to_string(i) + "," + std::to_string(j) + ")";
        return false;
      }
      for (unsigned long n = 0; n <= 100; ++n) {
        const Rational xv{mpz_class(brute_force_sum(i, n))};
        const Rational yv{mpz_class(brute_force_sum(j, n))};
        if (rel.evaluate(xv, yv) != Rational(0)) {
          detail = "numeric failure at n=" + std::to_string(n);
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden g-polynomials g_3..g_6", 1.0, golden_g_polys},
      {2, "Faulhaber forms f_3, f_5, f_7", 1.0, golden_faulhaber},
      {3, "even factorization of S_4", 1.0, golden_even_factor},
      {4, "d/e coefficient laws for r <= 60", 30.0, coefficient_laws},
      {5, "route equivalence for k <= 100", 60.0, route_equivalence},
      {6, "oracle sweeps for k <= 60, n <= 200", 60.0, oracle_equivalence},
      {7, "g_k substitution contract for k <= 100", 120.0, theorem_contract},
      {8, "term-count bound for k <= 100", 5.0, term_count_claim},
      {9, "greedy decomposition for k <= 40", 30.0, greedy_decomposition},
      {10, "relation polynomials for i < j <= 4", 60.0, relation_vanishing},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = c.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && seconds > c.limit_seconds) {
      ok = false;
      detail = "time limit exceeded";
    }
    std::printf("%s %2d  %-45s (%.2fs, limit %.0fs)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.label,
                seconds, c.limit_seconds, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
  }
  if (failures == 0)
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}
