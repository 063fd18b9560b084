#pragma once

// d_n = int_n^inf |1 + f_n(x)|^2 x^-2 dx, split into an exact rational main
// term on [n, X] and a certified bracket for the tail beyond X.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "etacrit/mobius.hpp"
#include "etacrit/rational.hpp"
#include "etacrit/report.hpp"

namespace etacrit {

inline constexpr std::int64_t kDefaultPeriodLimit = 10'000'000;

struct CriterionRow {
  std::int64_t n = 0;
  Rational cutoff;
  Rational lower;  // lower integration limit of the main term (n by default)
  Rational main;
  Rational tail_low;  // always 0
  double tail_high = 0.0;
  std::optional<double> exact_tail;
  std::optional<std::int64_t> period;
  double runtime_ms = 0.0;
};

/// Exact int_lower^X |1 + f_n(x)|^2 x^-2 dx for 0 < lower < X.
Rational criterion_integral(std::int64_t n, const Rational& lower, const Rational& cutoff, const MobiusTable& mu);

/// criterion_integral with lower limit n. Requires X > n.
Rational criterion_main(std::int64_t n, const Rational& cutoff, const MobiusTable& mu);

/// (1 + sum_{k<=n} |mu(k)|)^2 / X, an upper bound on the tail beyond X.
Rational tail_bound_sup(std::int64_t n, const Rational& cutoff, const MobiusTable& mu);

/// 2 * lcm(1..n), or nullopt if it exceeds `limit`.
std::optional<std::int64_t> criterion_period(std::int64_t n, std::int64_t limit);

/// The tail int_X^inf |1 + f_n|^2 x^-2 dx summed over one period of cells in
/// closed form with digamma; nullopt when the period exceeds period_limit.
std::optional<double> periodic_tail_exact(std::int64_t n, const Rational& cutoff, const MobiusTable& mu,
                                          std::int64_t period_limit);

/// Absolute error allowance added to a digamma tail before it is used as an
/// upper bound.
double tail_error_allowance(double exact_tail);

/// One evaluation with lower limit n (or `lower` when given).
CriterionRow criterion_row(std::int64_t n, const Rational& cutoff, const MobiusTable& mu,
                           std::int64_t period_limit = kDefaultPeriodLimit,
                           const std::optional<Rational>& lower = std::nullopt);

/// Exact check that int_{1/X}^{1/2} |1 + f_n(1/x)|^2 dx, enumerated over
/// reciprocal breakpoints 1/(k j), equals int_2^X |1 + f_n(t)|^2 t^-2 dt.
VerificationReport substitution_equivalence_check(std::int64_t n, const Rational& cutoff, const MobiusTable& mu);

struct CutoffPolicy {
  std::optional<Rational> fixed;  // otherwise max(1000, 10 (n + 1))
  Rational cutoff_for(std::int64_t n) const;
};

using SweepProgress = std::function<void(const CriterionRow&, std::size_t done, std::size_t total)>;

/// Rows for n = 1..n_max in n order.
std::vector<CriterionRow> sweep(std::int64_t n_max, const CutoffPolicy& policy, std::int64_t period_limit,
                                const MobiusTable& mu, const SweepProgress& progress = {});

}  // namespace etacrit
