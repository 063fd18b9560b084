#pragma once

// Data-parallel inner loops. Each kernel has a plain serial reference
// (`*_serial`) kept for testing and benchmarking, and an OpenMP version.
//
// The OpenMP floating-point reductions split the index range into fixed
// blocks of kBlockSize, sum each block in order, and combine block partials
// serially, so results do not depend on the thread count.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "etacrit/mobius.hpp"
#include "etacrit/rational.hpp"

namespace etacrit::kernels {

inline constexpr std::size_t kBlockSize = 4096;

/// out[i] = sum_{k<=n} mu(k) * [floor(points[i]/k) is odd], points[i] >= 0.
/// This is f_n on the unit cell [points[i], points[i]+1).
void f_values_serial(std::int64_t n, const MobiusTable& mu, std::span<const std::int64_t> points,
                     std::span<std::int64_t> out);
void f_values(std::int64_t n, const MobiusTable& mu, std::span<const std::int64_t> points,
              std::span<std::int64_t> out);

/// Exact sum of rationals. The OpenMP version sums fixed chunks by binary
/// splitting in parallel, then combines the chunk results.
Rational exact_sum_serial(std::span<const Rational> terms);
Rational exact_sum(std::span<const Rational> terms);

/// sum_{k=1}^{pairs} ((2k-1)^{-s} - (2k)^{-s}).
std::complex<double> alternating_power_sum_serial(std::complex<double> s, std::int64_t pairs);
std::complex<double> alternating_power_sum(std::complex<double> s, std::int64_t pairs);

/// One cell [lo, hi) of a periodic tail, with lo and hi already divided by
/// the period, weight = value^2 / period and log_ratio = log(hi / lo).
struct TailCell {
  double lo_scaled;
  double hi_scaled;
  double log_ratio;
  double weight;
};

/// sum weight * (psi(hi_scaled) - psi(lo_scaled)), differenced as
/// (psi - log) terms plus the exact log ratio to avoid cancellation.
double digamma_tail_sum_serial(std::span<const TailCell> cells);
double digamma_tail_sum(std::span<const TailCell> cells);

/// sum_{j=lo}^{hi-1} pattern[j mod P] * (j^{-s} - (j+1)^{-s}), lo >= 1.
std::complex<double> mellin_cell_sum_serial(std::complex<double> s, std::span<const std::int64_t> pattern,
                                            std::int64_t lo, std::int64_t hi);
std::complex<double> mellin_cell_sum(std::complex<double> s, std::span<const std::int64_t> pattern,
                                     std::int64_t lo, std::int64_t hi);

/// x^{-s} for x > 0 on the principal branch.
inline std::complex<double> pow_neg(double x, std::complex<double> s) { return std::exp(-s * std::log(x)); }

}  // namespace etacrit::kernels
