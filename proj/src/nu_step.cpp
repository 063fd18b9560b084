#include "etacrit/nu_step.hpp"

#include <algorithm>
#include <stdexcept>

#include "etacrit/kernels.hpp"

namespace etacrit {

int nu_eval(const Rational& t) {
  if (sgn(t) < 0) throw std::invalid_argument("nu_eval: t must be >= 0");
  return mpz_odd_p(floor_of(t).get_mpz_t()) ? 1 : 0;
}

Rational nu_fractional_form(const Rational& t) {
  if (sgn(t) < 0) throw std::invalid_argument("nu_fractional_form: t must be >= 0");
  auto frac = [](const Rational& y) { return Rational(y - Rational(floor_of(y))); };
  const Rational half(1, 2);
  return frac(t / 2) + half - frac(t / 2 + half);
}

StepFunction StepFunction::from_cells(std::vector<Rational> breakpoints, std::vector<std::int64_t> values) {
  if (breakpoints.size() < 2 || values.size() + 1 != breakpoints.size())
    throw std::invalid_argument("step function needs one value per cell");
  if (sgn(breakpoints.front()) <= 0) throw std::invalid_argument("step function window must start above 0");
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    if (!(breakpoints[i - 1] < breakpoints[i]))
      throw std::invalid_argument("step function breakpoints must be strictly increasing");

  StepFunction sf;
  sf.breakpoints_.reserve(breakpoints.size());
  sf.values_.reserve(values.size());
  sf.breakpoints_.push_back(std::move(breakpoints.front()));
  sf.values_.push_back(values.front());
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] == sf.values_.back()) continue;
    sf.breakpoints_.push_back(std::move(breakpoints[i]));
    sf.values_.push_back(values[i]);
  }
  sf.breakpoints_.push_back(std::move(breakpoints.back()));
  return sf;
}

std::int64_t StepFunction::value_at(const Rational& x) const {
  if (x < window_lo() || !(x < window_hi())) throw std::out_of_range("value_at: point outside window");
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

StepFunction build_f(std::int64_t n, const MobiusTable& mu, const Window& window) {
  if (n < 1) throw std::invalid_argument("build_f: n must be >= 1");
  if (mu.limit() < n) throw std::invalid_argument("build_f: mobius table smaller than n");
  if (sgn(window.lo) <= 0) throw std::invalid_argument("build_f: window must start above 0");
  if (!(window.lo < window.hi)) throw std::invalid_argument("build_f: empty window");
  if (window.hi > Rational(BigInt(1) << 62)) throw std::out_of_range("build_f: window too large");

  const std::int64_t lo_floor = floor_int64(window.lo);
  const std::int64_t hi_floor = floor_int64(window.hi);
  // Integer multiples m of k satisfy m < hi iff m < hi_end.
  const std::int64_t hi_end = (window.hi == Rational(BigInt(static_cast<long>(hi_floor)))) ? hi_floor : hi_floor + 1;

  std::vector<std::int64_t> jumps;
  for (std::int64_t k = 1; k <= n; ++k) {
    if (mu[k] == 0) continue;  // contributes nothing to f_n, so no jumps
    for (std::int64_t m = (lo_floor / k + 1) * k; m < hi_end; m += k) jumps.push_back(m);
  }
  std::sort(jumps.begin(), jumps.end());
  jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());

  std::vector<std::int64_t> left_floors;
  left_floors.reserve(jumps.size() + 1);
  left_floors.push_back(lo_floor);
  left_floors.insert(left_floors.end(), jumps.begin(), jumps.end());

  std::vector<std::int64_t> values(left_floors.size());
  kernels::f_values(n, mu, left_floors, values);

  std::vector<Rational> breakpoints;
  breakpoints.reserve(jumps.size() + 2);
  breakpoints.push_back(window.lo);
  for (std::int64_t m : jumps) breakpoints.emplace_back(static_cast<long>(m));
  breakpoints.push_back(window.hi);
  return StepFunction::from_cells(std::move(breakpoints), std::move(values));
}

StepFunction add_constant(const StepFunction& sf, std::int64_t c) {
  std::vector<Rational> breakpoints(sf.breakpoints().begin(), sf.breakpoints().end());
  std::vector<std::int64_t> values(sf.values().begin(), sf.values().end());
  for (auto& v : values) v += c;
  return StepFunction::from_cells(std::move(breakpoints), std::move(values));
}

Rational integrate_cells_sq_invsq(std::span<const Rational> breakpoints, std::span<const std::int64_t> values,
                                  const Rational& a, const Rational& b) {
  if (breakpoints.size() < 2 || values.size() + 1 != breakpoints.size())
    throw std::invalid_argument("integrate: malformed cells");
  if (!(a < b) || a < breakpoints.front() || b > breakpoints.back())
    throw std::invalid_argument("integrate: [a, b] must be a nonempty subinterval of the window");

  auto first = std::upper_bound(breakpoints.begin(), breakpoints.end(), a) - breakpoints.begin() - 1;
  std::vector<Rational> terms;
  for (auto i = static_cast<std::size_t>(first); i < values.size() && breakpoints[i] < b; ++i) {
    if (values[i] == 0) continue;
    const Rational& lo = std::max(a, breakpoints[i]);
    const Rational& hi = std::min(b, breakpoints[i + 1]);
    const Rational weight(BigInt(static_cast<long>(values[i])) * BigInt(static_cast<long>(values[i])));
    terms.push_back(weight * (hi - lo) / (lo * hi));
  }
  return kernels::exact_sum(terms);
}

Rational integrate_sq_invsq(const StepFunction& sf, const Rational& a, const Rational& b) {
  return integrate_cells_sq_invsq(sf.breakpoints(), sf.values(), a, b);
}

}  // namespace etacrit
