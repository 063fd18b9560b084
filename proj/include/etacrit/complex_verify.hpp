#pragma once

// Double-precision checks of the Mellin-type identities linking nu, f_m and
// the Dirichlet eta function. Powers of positive reals use the principal
// branch throughout.

#include <cstdint>
#include <span>
#include <utility>

#include "etacrit/criterion.hpp"
#include "etacrit/mobius.hpp"
#include "etacrit/rational.hpp"
#include "etacrit/report.hpp"

namespace etacrit {

/// eta(s) for Re s > 0 by Cohen-Villegas-Zagier acceleration of the
/// alternating series; about 1e-13 absolute for |Im s| <= 50. Throws
/// std::domain_error for |Im s| beyond about 400.
ComplexValue eta_ref(ComplexValue s);

/// zeta(s) = eta(s) / (1 - 2^{1-s}) for Re s > 1.
ComplexValue zeta_ref(ComplexValue s);

/// sum_{k<=m} mu(k) k^{-s}.
ComplexValue dirichlet_partial(std::int64_t m, ComplexValue s, const MobiusTable& mu);

/// ||x^{s-1}||_2 on (0, 1/2) = 1 / (2^{sigma - 1/2} sqrt(2 sigma - 1)), sigma > 1/2.
double norm_xs(double sigma);

/// sum_{i=0}^{count-1} (a + i)^{-s} for a > 0: direct terms until a + i is
/// large, Euler-Maclaurin for the rest.
ComplexValue power_sum(ComplexValue s, double a, std::int64_t count);

/// int_lo^hi v(t) t^{-s-1} dt where v(t) = pattern[floor(t) mod P], lo >= 1
/// an integer and hi > lo rational. Long ranges are summed by parts, one
/// residue class at a time, with power_sum; short ones cell by cell.
ComplexValue step_mellin_integral(ComplexValue s, std::span<const std::int64_t> pattern, std::int64_t lo,
                                  const Rational& hi, std::int64_t direct_limit = std::int64_t{1} << 20);

VerificationReport verify_thm21(ComplexValue s, std::int64_t truncation);

VerificationReport verify_lemma31(const Rational& theta, ComplexValue s, const Rational& eps);

VerificationReport verify_eq9_finite(std::int64_t m, ComplexValue s, const Rational& eps, const MobiusTable& mu);

/// (lower, upper) bracket on ||1 + f*_m||_2 over (0, 1/2), via the
/// substitution t = 1/x: sqrt of int_2^inf |1 + f_m(t)|^2 t^-2 dt.
std::pair<double, double> l2_norm_one_plus_fm(std::int64_t m, const Rational& cutoff, const MobiusTable& mu,
                                              std::int64_t period_limit = kDefaultPeriodLimit);

/// Hoelder bound |eta(s)/s * sum_{k>m} mu(k) k^{-s}| <= ||1 + f*_m||_2 ||x^{s-1}||_2,
/// checked for Re s > 1 where the remainder equals 1/zeta(s) - M_m(s).
VerificationReport verify_eq16(std::int64_t m, ComplexValue s, const Rational& cutoff, const MobiusTable& mu,
                               std::int64_t period_limit = kDefaultPeriodLimit);

/// Right-hand side of the Hoelder bound alone, for 1/2 < Re s where no
/// reference value for the remainder is available.
VerificationReport eq16_rhs_bound(std::int64_t m, ComplexValue s, const Rational& cutoff, const MobiusTable& mu,
                                  std::int64_t period_limit = kDefaultPeriodLimit);

}  // namespace etacrit
