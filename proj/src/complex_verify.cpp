#include "etacrit/complex_verify.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "etacrit/kernels.hpp"

namespace etacrit {

namespace {

constexpr double kReferenceSlack = 1e-12;
constexpr int kEulerMaclaurinTerms = 10;
constexpr int kMaxEtaTerms = 390;

// B_{2j} / (2j)!, j = 1..10.
constexpr std::array<double, kEulerMaclaurinTerms> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
};

void require_finite(ComplexValue s) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) throw std::invalid_argument("s must be finite");
}

std::string format_complex(ComplexValue z) { return fmt::format("{}{:+}i", z.real(), z.imag()); }

ComplexValue expm1(ComplexValue w) {
  if (std::abs(w) > 1e-2) return std::exp(w) - 1.0;
  ComplexValue term = w;
  ComplexValue sum = w;
  for (int k = 2; k <= 8; ++k) {
    term *= w / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

// sum_{i=0}^{count-1} (b0 + i)^{-s} for b0 large enough that the
// Euler-Maclaurin remainder after kEulerMaclaurinTerms corrections is negligible.
ComplexValue euler_maclaurin_tail(ComplexValue s, double b0, std::int64_t count) {
  const double b1 = b0 + static_cast<double>(count);
  const double log_ratio = std::log1p(static_cast<double>(count) / b0);
  const ComplexValue one_minus_s = 1.0 - s;

  ComplexValue integral;
  if (std::abs(one_minus_s) == 0.0) {
    integral = log_ratio;
  } else {
    integral = std::exp(one_minus_s * std::log(b0)) * expm1(one_minus_s * log_ratio) / one_minus_s;
  }

  const ComplexValue g0 = kernels::pow_neg(b0, s);
  const ComplexValue g1 = kernels::pow_neg(b1, s);
  ComplexValue sum = integral + 0.5 * (g0 - g1);

  // g^{(2j-1)}(x) = -(s)_{2j-1} x^{-s-2j+1}
  ComplexValue rising = s;  // (s)_1
  ComplexValue d0 = g0 / b0;
  ComplexValue d1 = g1 / b1;
  for (int j = 1; j <= kEulerMaclaurinTerms; ++j) {
    sum += kBernoulliOverFactorial[j - 1] * (-rising) * (d1 - d0);
    const double m = 2.0 * j - 1.0;
    rising *= (s + m) * (s + m + 1.0);
    d0 /= b0 * b0;
    d1 /= b1 * b1;
  }
  return sum;
}

}  // namespace

ComplexValue eta_ref(ComplexValue s) {
  require_finite(s);
  if (s.real() <= 0.0) throw std::invalid_argument("eta_ref: Re s must be > 0");

  const double t = std::abs(s.imag());
  const double rate = std::log(3.0 + std::sqrt(8.0));
  const int n = static_cast<int>(std::ceil((std::numbers::pi * t / 2.0 + std::log1p(2.0 * t) + 40.0) / rate));
  // d_n grows like (3 + sqrt 8)^n and overflows a double past this.
  if (n > kMaxEtaTerms) throw std::domain_error("eta_ref: |Im s| too large for double-precision acceleration");

  // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), built incrementally.
  std::vector<double> d(static_cast<std::size_t>(n) + 1);
  double term = 1.0;  // n * (n-1)! / n!
  double partial = term;
  d[0] = partial;
  for (int i = 1; i <= n; ++i) {
    term *= 4.0 * (n + i - 1.0) * (n - i + 1.0) / ((2.0 * i) * (2.0 * i - 1.0));
    partial += term;
    d[i] = partial;
  }
  const double dn = d[n];

  ComplexValue sum = 0.0;
  for (int k = n - 1; k >= 0; --k) {
    const double weight = (dn - d[k]) / dn;
    const ComplexValue power = kernels::pow_neg(k + 1.0, s);
    sum += (k % 2 == 0 ? weight : -weight) * power;
  }
  return sum;
}

ComplexValue zeta_ref(ComplexValue s) {
  require_finite(s);
  if (s.real() <= 1.0) throw std::invalid_argument("zeta_ref: Re s must be > 1");
  const ComplexValue factor = 1.0 - std::exp((1.0 - s) * std::numbers::ln2);
  if (std::abs(factor) < 1e-14) throw std::invalid_argument("zeta_ref: 1 - 2^{1-s} vanishes");
  return eta_ref(s) / factor;
}

ComplexValue dirichlet_partial(std::int64_t m, ComplexValue s, const MobiusTable& mu) {
  require_finite(s);
  if (m < 1) throw std::invalid_argument("dirichlet_partial: m must be >= 1");
  if (mu.limit() < m) throw std::invalid_argument("dirichlet_partial: mobius table smaller than m");
  ComplexValue sum = 0.0;
  for (std::int64_t k = m; k >= 1; --k)
    if (mu[k] != 0) sum += static_cast<double>(mu[k]) * kernels::pow_neg(static_cast<double>(k), s);
  return sum;
}

double norm_xs(double sigma) {
  if (!(sigma > 0.5) || !std::isfinite(sigma))
    throw std::domain_error("norm_xs: ||x^{s-1}||_2 on (0, 1/2) diverges for sigma <= 1/2");
  return 1.0 / (std::exp2(sigma - 0.5) * std::sqrt(2.0 * sigma - 1.0));
}

ComplexValue power_sum(ComplexValue s, double a, std::int64_t count) {
  require_finite(s);
  if (!(a > 0.0)) throw std::invalid_argument("power_sum: a must be > 0");
  if (count <= 0) return 0.0;

  const double threshold = 2.0 * (std::abs(s) + 2.0 * kEulerMaclaurinTerms) + 16.0;
  const auto direct = std::min<std::int64_t>(count, std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil(threshold - a))));
  ComplexValue sum = 0.0;
  for (std::int64_t i = direct - 1; i >= 0; --i) sum += kernels::pow_neg(a + static_cast<double>(i), s);
  if (direct == count) return sum;
  return euler_maclaurin_tail(s, a + static_cast<double>(direct), count - direct) + sum;
}

ComplexValue step_mellin_integral(ComplexValue s, std::span<const std::int64_t> pattern, std::int64_t lo,
                                  const Rational& hi, std::int64_t direct_limit) {
  require_finite(s);
  if (pattern.empty()) throw std::invalid_argument("step_mellin_integral: empty pattern");
  if (lo < 1 || !(hi > Rational(static_cast<long>(lo)))) throw std::invalid_argument("step_mellin_integral: need 1 <= lo < hi");
  if (std::abs(s) == 0.0) throw std::invalid_argument("step_mellin_integral: s must be nonzero");

  const auto period = static_cast<std::int64_t>(pattern.size());
  auto value = [&](std::int64_t j) { return pattern[static_cast<std::size_t>(j % period)]; };
  const std::int64_t last = floor_int64(hi);  // final, possibly partial, cell [last, hi)

  // sum_{j=lo}^{last-1} v_j (j^{-s} - (j+1)^{-s})
  ComplexValue full = 0.0;
  if (last > lo) {
    if (last - lo <= direct_limit || last - lo <= 8 * period) {
      full = kernels::mellin_cell_sum(s, pattern, lo, last);
    } else {
      // Summation by parts: v_lo lo^{-s} + sum_{j=lo+1}^{last-1} (v_j - v_{j-1}) j^{-s} - v_{last-1} last^{-s}.
      full = static_cast<double>(value(lo)) * kernels::pow_neg(static_cast<double>(lo), s) -
             static_cast<double>(value(last - 1)) * kernels::pow_neg(static_cast<double>(last), s);
      const std::int64_t first = lo + 1;
      const ComplexValue period_scale = kernels::pow_neg(static_cast<double>(period), s);
      for (std::int64_t r = 0; r < period; ++r) {
        const std::int64_t jump = pattern[r] - pattern[(r + period - 1) % period];
        if (jump == 0) continue;
        const std::int64_t j0 = first + (((r - first) % period) + period) % period;
        if (j0 > last - 1) continue;
        const std::int64_t count = (last - 1 - j0) / period + 1;
        full += static_cast<double>(jump) * period_scale *
                power_sum(s, static_cast<double>(j0) / static_cast<double>(period), count);
      }
    }
  }

  ComplexValue partial = 0.0;
  if (Rational(static_cast<long>(last)) < hi && value(last) != 0) {
    const double log_hi = std::log(Rational(hi / last).get_d()) + std::log(static_cast<double>(last));
    partial = static_cast<double>(value(last)) *
              (kernels::pow_neg(static_cast<double>(last), s) - std::exp(-s * log_hi));
  }
  return (full + partial) / s;
}

VerificationReport verify_thm21(ComplexValue s, std::int64_t truncation) {
  require_finite(s);
  if (s.real() <= 0.0) throw std::invalid_argument("verify_thm21: Re s must be > 0");
  if (truncation < 2 || truncation % 2 != 0) throw std::invalid_argument("verify_thm21: T must be even and >= 2");

  const double sigma = s.real();
  VerificationReport report;
  report.check_name = "thm21";
  report.parameters = {{"s", format_complex(s)}, {"T", std::to_string(truncation)}};
  report.lhs = kernels::alternating_power_sum(s, truncation / 2);
  report.rhs = eta_ref(s);
  report.abs_error = std::abs(report.lhs - report.rhs);
  report.rigorous_bound = std::abs(s) * std::pow(static_cast<double>(truncation), -sigma) / sigma + kReferenceSlack;
  return finalize(std::move(report));
}

VerificationReport verify_lemma31(const Rational& theta, ComplexValue s, const Rational& eps) {
  require_finite(s);
  if (sgn(theta) <= 0 || theta > 1) throw std::invalid_argument("verify_lemma31: theta must lie in (0, 1]");
  if (s.real() <= 0.0) throw std::invalid_argument("verify_lemma31: Re s must be > 0");
  if (sgn(eps) <= 0 || !(eps < theta)) throw std::invalid_argument("verify_lemma31: need 0 < eps < theta");

  // x in [eps, 1] maps to t = theta / x in [theta, theta / eps]; nu(t) = 0 below 1.
  static constexpr std::array<std::int64_t, 2> kNuPattern = {0, 1};
  const double log_theta = std::log(theta.get_d());
  const ComplexValue theta_s = std::exp(s * log_theta);
  const ComplexValue cells = step_mellin_integral(s, kNuPattern, 1, theta / eps);

  const double sigma = s.real();
  VerificationReport report;
  report.check_name = "lemma31";
  report.parameters = {{"theta", to_string(theta)}, {"s", format_complex(s)}, {"eps", to_string(eps)}};
  report.lhs = theta_s * cells;
  report.rhs = theta_s * eta_ref(s) / s;
  report.abs_error = std::abs(report.lhs - report.rhs);
  report.rigorous_bound = std::pow(eps.get_d(), sigma) / sigma + kReferenceSlack;
  return finalize(std::move(report));
}

VerificationReport verify_eq9_finite(std::int64_t m, ComplexValue s, const Rational& eps, const MobiusTable& mu) {
  require_finite(s);
  if (m < 1 || mu.limit() < m) throw std::invalid_argument("verify_eq9_finite: need 1 <= m <= mobius limit");
  if (s.real() <= 0.0) throw std::invalid_argument("verify_eq9_finite: Re s must be > 0");
  if (sgn(eps) <= 0 || !(eps < Rational(1, 2))) throw std::invalid_argument("verify_eq9_finite: need 0 < eps < 1/2");

  // 1 + f_m is periodic in t = 1/x with period 2 lcm(1..m); past a size cap
  // the pattern just covers the whole range instead.
  constexpr std::int64_t kPatternCap = std::int64_t{1} << 24;
  const Rational t_max = 1 / eps;
  std::int64_t pattern_size = 0;
  if (auto period = criterion_period(m, kPatternCap)) {
    pattern_size = *period;
  } else {
    pattern_size = floor_int64(t_max) + 1;
    if (pattern_size > (std::int64_t{1} << 26)) throw std::invalid_argument("verify_eq9_finite: eps too small for this m");
  }
  std::vector<std::int64_t> points(static_cast<std::size_t>(pattern_size));
  for (std::int64_t i = 0; i < pattern_size; ++i) points[i] = i;
  std::vector<std::int64_t> pattern(points.size());
  kernels::f_values(m, mu, points, pattern);
  for (auto& v : pattern) v += 1;

  const ComplexValue eta_over_s = eta_ref(s) / s;
  const ComplexValue constant = (1.0 - std::exp((1.0 - s) * std::numbers::ln2)) / s;
  const double sigma = s.real();

  VerificationReport report;
  report.check_name = "eq9_finite";
  report.parameters = {{"m", std::to_string(m)}, {"s", format_complex(s)}, {"eps", to_string(eps)}};
  report.lhs = step_mellin_integral(s, pattern, 2, t_max);
  report.rhs = eta_over_s * dirichlet_partial(m, s, mu) - constant;
  report.abs_error = std::abs(report.lhs - report.rhs);
  report.rigorous_bound =
      static_cast<double>(1 + mu.abs_sum(m)) * std::pow(eps.get_d(), sigma) / sigma + kReferenceSlack;
  return finalize(std::move(report));
}

std::pair<double, double> l2_norm_one_plus_fm(std::int64_t m, const Rational& cutoff, const MobiusTable& mu,
                                              std::int64_t period_limit) {
  if (!(cutoff > Rational(static_cast<long>(m + 1)))) throw std::invalid_argument("l2_norm_one_plus_fm: need X > m + 1");
  const CriterionRow row = criterion_row(m, cutoff, mu, period_limit, Rational(2));
  const double main = row.main.get_d();
  const double upper = std::nextafter(std::sqrt(main + row.tail_high), std::numeric_limits<double>::infinity());
  return {std::sqrt(main), upper};
}

VerificationReport verify_eq16(std::int64_t m, ComplexValue s, const Rational& cutoff, const MobiusTable& mu,
                               std::int64_t period_limit) {
  require_finite(s);
  if (s.real() <= 1.0) throw std::invalid_argument("verify_eq16: Re s must be > 1");

  const ComplexValue remainder = 1.0 / zeta_ref(s) - dirichlet_partial(m, s, mu);
  const double lhs = std::abs(eta_ref(s) / s) * std::abs(remainder);
  const double rhs = l2_norm_one_plus_fm(m, cutoff, mu, period_limit).second * norm_xs(s.real());

  VerificationReport report;
  report.check_name = "eq16_holder";
  report.parameters = {{"m", std::to_string(m)}, {"s", format_complex(s)}, {"cutoff", to_string(cutoff)}};
  report.lhs = lhs;
  report.rhs = rhs;
  report.abs_error = lhs;
  report.rigorous_bound = rhs;
  return finalize(std::move(report));
}

VerificationReport eq16_rhs_bound(std::int64_t m, ComplexValue s, const Rational& cutoff, const MobiusTable& mu,
                                  std::int64_t period_limit) {
  require_finite(s);
  const double rhs = l2_norm_one_plus_fm(m, cutoff, mu, period_limit).second * norm_xs(s.real());
  VerificationReport report;
  report.check_name = "eq16_rhs_only";
  report.parameters = {{"m", std::to_string(m)}, {"s", format_complex(s)}, {"cutoff", to_string(cutoff)}};
  report.lhs = 0.0;
  report.rhs = rhs;
  report.abs_error = 0.0;
  report.rigorous_bound = rhs;
  return finalize(std::move(report));
}

}  // namespace etacrit
