#include "etacrit/criterion.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "etacrit/kernels.hpp"
#include "etacrit/nu_step.hpp"

namespace etacrit {

Rational criterion_integral(std::int64_t n, const Rational& lower, const Rational& cutoff, const MobiusTable& mu) {
  if (!(lower < cutoff)) throw std::invalid_argument("criterion: cutoff must exceed the lower limit");
  const StepFunction shifted = add_constant(build_f(n, mu, Window{lower, cutoff}), 1);
  return integrate_sq_invsq(shifted, lower, cutoff);
}

Rational criterion_main(std::int64_t n, const Rational& cutoff, const MobiusTable& mu) {
  if (n < 1) throw std::invalid_argument("criterion_main: n must be >= 1");
  const Rational lower(static_cast<long>(n));
  if (!(cutoff > lower)) throw std::invalid_argument("criterion_main: cutoff X must exceed n");
  return criterion_integral(n, lower, cutoff, mu);
}

Rational tail_bound_sup(std::int64_t n, const Rational& cutoff, const MobiusTable& mu) {
  if (sgn(cutoff) <= 0) throw std::invalid_argument("tail_bound_sup: cutoff must be > 0");
  const BigInt peak = 1 + BigInt(static_cast<long>(mu.abs_sum(n)));
  return Rational(peak * peak) / cutoff;
}

std::optional<std::int64_t> criterion_period(std::int64_t n, std::int64_t limit) {
  if (n < 1) throw std::invalid_argument("criterion_period: n must be >= 1");
  std::int64_t l = 1;
  for (std::int64_t k = 2; k <= n; ++k) {
    const std::int64_t step = k / std::gcd(l, k);
    if (l > limit / (2 * step)) return std::nullopt;
    l *= step;
  }
  if (2 * l > limit) return std::nullopt;
  return 2 * l;
}

std::optional<double> periodic_tail_exact(std::int64_t n, const Rational& cutoff, const MobiusTable& mu,
                                          std::int64_t period_limit) {
  if (sgn(cutoff) <= 0) throw std::invalid_argument("periodic_tail_exact: cutoff must be > 0");
  const auto period = criterion_period(n, period_limit);
  if (!period) return std::nullopt;

  const Rational p(static_cast<long>(*period));
  const StepFunction one_period = add_constant(build_f(n, mu, Window{cutoff, cutoff + p}), 1);
  const auto bps = one_period.breakpoints();
  const auto vals = one_period.values();

  std::vector<kernels::TailCell> cells;
  cells.reserve(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] == 0) continue;
    const Rational& lo = bps[i];
    const Rational& hi = bps[i + 1];
    const Rational rel_width = (hi - lo) / lo;
    cells.push_back({Rational(lo / p).get_d(), Rational(hi / p).get_d(), std::log1p(rel_width.get_d()),
                     static_cast<double>(vals[i] * vals[i]) / static_cast<double>(*period)});
  }
  return kernels::digamma_tail_sum(cells);
}

double tail_error_allowance(double exact_tail) { return 1e-11 * std::abs(exact_tail) + 1e-12; }

CriterionRow criterion_row(std::int64_t n, const Rational& cutoff, const MobiusTable& mu, std::int64_t period_limit,
                           const std::optional<Rational>& lower) {
  const auto start = std::chrono::steady_clock::now();
  CriterionRow row;
  row.n = n;
  row.cutoff = cutoff;
  row.lower = lower.value_or(Rational(static_cast<long>(n)));
  row.main = lower ? criterion_integral(n, *lower, cutoff, mu) : criterion_main(n, cutoff, mu);
  row.tail_low = 0;

  // get_d truncates toward zero; step up one ulp to keep the bound an upper bound.
  row.tail_high = std::nextafter(tail_bound_sup(n, cutoff, mu).get_d(), std::numeric_limits<double>::infinity());
  row.period = criterion_period(n, period_limit);
  if (row.period) {
    row.exact_tail = periodic_tail_exact(n, cutoff, mu, period_limit);
    row.tail_high = std::min(row.tail_high, *row.exact_tail + tail_error_allowance(*row.exact_tail));
  }
  row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

VerificationReport substitution_equivalence_check(std::int64_t n, const Rational& cutoff, const MobiusTable& mu) {
  if (n < 1 || mu.limit() < n) throw std::invalid_argument("substitution check: need 1 <= n <= mobius limit");
  if (!(cutoff > Rational(std::max<long>(n, 2)))) throw std::invalid_argument("substitution check: cutoff too small");

  // Reciprocal domain x in [1/X, 1/2]; f_n(1/x) jumps where 1/x = k j.
  const Rational x_lo = 1 / cutoff;
  const Rational x_hi(1, 2);
  std::vector<Rational> breakpoints{x_lo, x_hi};
  for (std::int64_t k = 1; k <= n; ++k) {
    for (std::int64_t j = 1;; ++j) {
      const Rational q(static_cast<long>(k * j));
      if (!(q < cutoff)) break;
      if (q > 2) breakpoints.emplace_back(1 / q);
    }
  }
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

  std::vector<Rational> terms;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const Rational mid = (breakpoints[i] + breakpoints[i + 1]) / 2;
    std::int64_t v = 1;
    for (std::int64_t k = 1; k <= n; ++k)
      if (mu[k] != 0) v += mu[k] * nu_eval(1 / (Rational(static_cast<long>(k)) * mid));
    if (v != 0) terms.push_back(Rational(static_cast<long>(v * v)) * (breakpoints[i + 1] - breakpoints[i]));
  }
  const Rational reciprocal = kernels::exact_sum(terms);
  const Rational direct = criterion_integral(n, Rational(2), cutoff, mu);

  VerificationReport report;
  report.check_name = "substitution_equivalence";
  report.parameters = {{"n", std::to_string(n)}, {"cutoff", to_string(cutoff)}};
  report.lhs = reciprocal.get_d();
  report.rhs = direct.get_d();
  report.abs_error = Rational(abs(reciprocal - direct)).get_d();
  report.rigorous_bound = 0.0;
  report.exact_lhs = to_string(reciprocal);
  report.exact_rhs = to_string(direct);
  return finalize(std::move(report));
}

Rational CutoffPolicy::cutoff_for(std::int64_t n) const {
  if (fixed) return *fixed;
  return Rational(static_cast<long>(std::max<std::int64_t>(1000, 10 * (n + 1))));
}

std::vector<CriterionRow> sweep(std::int64_t n_max, const CutoffPolicy& policy, std::int64_t period_limit,
                                const MobiusTable& mu, const SweepProgress& progress) {
  if (n_max < 1) throw std::invalid_argument("sweep: n_max must be >= 1");
  if (mu.limit() < n_max) throw std::invalid_argument("sweep: mobius table smaller than n_max");

  std::vector<CriterionRow> rows(static_cast<std::size_t>(n_max));
  std::exception_ptr failure;
  std::size_t done = 0;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t n = 1; n <= n_max; ++n) {
    try {
      rows[n - 1] = criterion_row(n, policy.cutoff_for(n), mu, period_limit);
#pragma omp critical(etacrit_sweep_progress)
      {
        ++done;
        if (progress) progress(rows[n - 1], done, rows.size());
      }
    } catch (...) {
#pragma omp critical(etacrit_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace etacrit
