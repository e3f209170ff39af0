#pragma once

#include <map>

#include "powersums/bipoly.hpp"
#include "powersums/unipoly.hpp"

namespace powersums {

// Memo table for power-sum closed forms S_k(n) and their representations
// g_k(x, y) in terms of S_1 and S_2.  Entries are deterministic functions of
// the key; both recursion routes produce identical polynomials, so the cache
// stores values, not provenance.  Confine a table to one thread, or guard it
// externally.
struct PowerSumTable {
  std::map<unsigned, UniPoly> memo;   // k -> S_k(n)
  std::map<unsigned, BiPoly> gmemo;   // k -> g_k(x, y)
};

// Expansion coefficients of a power-sum product in the power-sum basis:
// for the odd step, S_r^2 = sum_{i=r}^{2r+1} d_i S_i; for the even step,
// S_r S_{r+1} = sum_{i=r+1}^{2r+2} e_i S_i.  The map holds the full index
// range, zeros included — the vanishing pattern is part of the result.
struct CoeffVector {
  enum class Kind { odd, even };
  Kind kind;
  unsigned r;
  std::map<unsigned, Rational> coeffs;
};

// One half-index recursion step: the expansion coefficients it produced and
// the power sum it assembled.
struct HalfTermStep {
  CoeffVector expansion;
  UniPoly power_sum;
};

struct LeadingCoefficients {
  Rational leading;     // coefficient of n^(k+1), always 1/(k+1)
  Rational subleading;  // coefficient of n^k, always 1/2
  Rational constant;    // coefficient of n^0, always 0
};

// Outcome of a degree-descent decomposition into x^a y^b terms: either the
// accumulated bivariate polynomial, or the first remainder that no term can
// cancel (for the greedy x/y scheme that remainder has degree <= 1 in n; for
// the x-only scheme it may simply have odd degree).
struct DecompResult {
  enum class Status { success, obstructed };
  Status status = Status::success;
  BiPoly value;      // meaningful on success
  UniPoly residual;  // meaningful on obstruction
  bool ok() const { return status == Status::success; }
};

struct TermCountReport {
  unsigned pascal_terms;    // power sums referenced by the telescoped binomial recursion
  unsigned halfterm_terms;  // power sums referenced by the half-index identity
};

// S_k(n) by the telescoped Binomial Theorem recursion
//   S_k = ((n+1)^{k+1} - 1 - sum_{l<k} C(k+1, l) S_l) / (k+1),
// memoizing every intermediate power sum.  Degree k+1, zero constant term.
const UniPoly& pascal_power_sum(unsigned k, PowerSumTable& table);

// S_k(n) by the half-index route: odd_step / even_step for k >= 3, Pascal's
// recursion for the k <= 2 bases.
const UniPoly& halfterm_power_sum(unsigned k, PowerSumTable& table);

// (coefficient of n^(k+1), of n^k, of n^0) read off the memoized S_k; k >= 1.
LeadingCoefficients leading_coefficients(unsigned k, PowerSumTable& table);

// Expands p(m) = m^{2r} + 2 m^r S_r(m-1) in the monomial basis; the
// coefficient of m^i is d_i.  Returns the d vector together with
//   S_{2r+1} = (r+1)/2 * (S_r^2 - sum_{i=r}^{2r-1} d_i S_i),
// using and filling the table's memo.  Requires r >= 1.
HalfTermStep odd_step(unsigned r, PowerSumTable& table);

// Expands p(m) = m^{2r+1} + m^r S_{r+1}(m-1) + m^{r+1} S_r(m-1); the
// coefficient of m^i is e_i.  Returns the e vector together with
//   S_{2r+2} = (r+1)(r+2)/(2r+3) * (S_r S_{r+1} - sum_{i=r+1}^{2r} e_i S_i).
// Requires r >= 1.
HalfTermStep even_step(unsigned r, PowerSumTable& table);

// The bivariate polynomial g_k with S_k(n) = g_k(S_1(n), S_2(n)) and
// g_k(0, 0) = 0, built inductively: g_1 = x, g_2 = y, then the odd/even step
// identities with every S_i rewritten as g_i.  Cached in table.gmemo; k >= 1.
const BiPoly& g_poly(unsigned k, PowerSumTable& table);

// Faulhaber form for odd k: the polynomial f with S_k(n) = f(S_1(n)), returned
// as a BiPoly with all y exponents zero.  Computed by peeling leading terms
// with pure powers of S_1; an obstruction cannot happen for odd k, so one is
// reported as std::logic_error.
BiPoly faulhaber_in_a(unsigned k, PowerSumTable& table);

// Classical even-k form: y * q(x) with S_k(n) = S_2(n) * q(S_1(n)), obtained
// by exact division of S_k by S_2 followed by x-only peeling of the quotient.
// k even, k >= 2; internal-consistency failures throw std::logic_error.
BiPoly faulhaber_even_factor(unsigned k, PowerSumTable& table);

// Degree descent with the canonical term choice b = d mod 2, a = (d - 3b)/2
// for current degree d >= 2; an obstruction is a surviving nonzero remainder
// of degree <= 1.  Rejects inputs with a nonzero constant term.
DecompResult decompose_greedy_ab(const UniPoly& p);

// Same descent restricted to pure powers of x (degree d = 2a); stops on any
// odd-degree or degree <= 1 nonzero remainder.
DecompResult decompose_pure_a(const UniPoly& p);

// Resultant of (S_i(n) - x, S_j(n) - y) eliminating n, computed from the
// Sylvester matrix by fraction-free Bareiss elimination over integer-cleared
// bivariate entries; normalized to primitive integer coefficients with the
// lexicographically largest term positive.  i, j >= 1 and i != j.
BiPoly power_sum_resultant(unsigned i, unsigned j, PowerSumTable& table);

// A nonzero integer-coefficient T(x, y) with T(S_i(n), S_j(n)) identically
// zero: the primitive squarefree part of power_sum_resultant (the raw
// resultant can carry repeated factors, e.g. the pair (1, 3) yields a perfect
// square).  Throws std::invalid_argument on i = j, std::logic_error if the
// resultant degenerates to zero.
BiPoly relation_polynomial(unsigned i, unsigned j, PowerSumTable& table);

// How many previously computed power sums each recursion consults to produce
// S_k: the telescoped binomial identity reads all of S_0..S_{k-1}; the
// half-index identity reads its subtraction-sum terms plus the distinct
// product factors.  k >= 3.
TermCountReport term_count_report(unsigned k);

}  // namespace powersums
