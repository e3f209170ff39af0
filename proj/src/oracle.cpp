#include "powersums/oracle.hpp"

#include <algorithm>
#include <thread>

namespace powersums {

mpz_class brute_force_sum(unsigned k, unsigned long n) {
  mpz_class total(0), power;
  for (unsigned long m = 1; m <= n; ++m) {
    mpz_ui_pow_ui(power.get_mpz_t(), m, k);
    total += power;
  }
  return total;
}

namespace {

void sweep_range(unsigned k, const UniPoly& p, unsigned long lo, unsigned long hi,
                 std::vector<SweepMismatch>& out) {
  mpz_class running = brute_force_sum(k, lo == 0 ? 0 : lo - 1);
  mpz_class power;
  for (unsigned long n = lo; n <= hi; ++n) {
    if (n > 0) {
      mpz_ui_pow_ui(power.get_mpz_t(), n, k);
      running += power;
    }
    const Rational got = p.evaluate(Rational(mpz_class(n)));
    if (!got.is_integer() || got.numerator() != running)
      out.push_back({n, running, got});
  }
}

}  // namespace

SweepReport verify_poly(unsigned k, const UniPoly& p, unsigned long n_max, unsigned jobs) {
  SweepReport report{k, n_max, {}};
  if (jobs <= 1 || n_max < jobs) {
    sweep_range(k, p, 0, n_max, report.mismatches);
    return report;
  }

  const unsigned long chunk = n_max / jobs + 1;
  std::vector<std::vector<SweepMismatch>> partial(jobs);
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    const unsigned long lo = static_cast<unsigned long>(w) * chunk;
    if (lo > n_max) break;
    const unsigned long hi = std::min(n_max, lo + chunk - 1);
    workers.emplace_back(sweep_range, k, std::cref(p), lo, hi, std::ref(partial[w]));
  }
  for (auto& t : workers) t.join();
  for (auto& part : partial)
    report.mismatches.insert(report.mismatches.end(), part.begin(), part.end());
  return report;
}

}  // namespace powersums
