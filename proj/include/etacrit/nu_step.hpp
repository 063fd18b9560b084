#pragma once

// The 0/1 indicator nu(t) = {t/2} + 1/2 - {t/2 + 1/2} and exact step-function
// representations of f_n(x) = sum_{k<=n} mu(k) nu(x/k).

#include <cstdint>
#include <span>
#include <vector>

#include "etacrit/mobius.hpp"
#include "etacrit/rational.hpp"

namespace etacrit {

/// 1 iff floor(t) is odd, i.e. t lies in some [2k-1, 2k). Requires t >= 0.
int nu_eval(const Rational& t);

/// nu evaluated literally as {t/2} + 1/2 - {t/2 + 1/2} with exact fractional parts.
Rational nu_fractional_form(const Rational& t);

/// Half-open window [lo, hi) with 0 < lo < hi.
struct Window {
  Rational lo;
  Rational hi;
};

/// Piecewise-constant integer function on a half-open window. Cell i is
/// [breakpoints[i], breakpoints[i+1]) and carries values[i]; pointwise
/// evaluation is right-continuous. Adjacent cells always differ in value.
class StepFunction {
 public:
  /// Validates the cell layout and merges equal-valued neighbours.
  static StepFunction from_cells(std::vector<Rational> breakpoints, std::vector<std::int64_t> values);

  const Rational& window_lo() const { return breakpoints_.front(); }
  const Rational& window_hi() const { return breakpoints_.back(); }
  std::span<const Rational> breakpoints() const { return breakpoints_; }
  std::span<const std::int64_t> values() const { return values_; }
  std::size_t cell_count() const { return values_.size(); }

  /// Value at x in [window_lo, window_hi).
  std::int64_t value_at(const Rational& x) const;

 private:
  StepFunction() = default;
  std::vector<Rational> breakpoints_;
  std::vector<std::int64_t> values_;
};

/// Exact restriction of f_n to the window. The window must lie in (0, 2^62).
StepFunction build_f(std::int64_t n, const MobiusTable& mu, const Window& window);

/// Pointwise sf + c.
StepFunction add_constant(const StepFunction& sf, std::int64_t c);

/// Exact integral of sf(x)^2 / x^2 over [a, b], window_lo <= a < b <= window_hi.
Rational integrate_sq_invsq(const StepFunction& sf, const Rational& a, const Rational& b);

/// Same integral over raw (possibly unmerged) cells.
Rational integrate_cells_sq_invsq(std::span<const Rational> breakpoints, std::span<const std::int64_t> values,
                                  const Rational& a, const Rational& b);

}  // namespace etacrit
