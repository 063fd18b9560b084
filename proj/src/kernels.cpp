#include "etacrit/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <utility>

#include "etacrit/digamma.hpp"

namespace etacrit::kernels {

namespace {

// Neumaier compensated accumulator.
template <typename T>
class CompensatedSum {
 public:
  void add(T x) {
    const T t = sum_ + x;
    if constexpr (std::is_same_v<T, double>) {
      compensation_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
    } else {
      compensation_ += T(component(sum_.real(), x.real(), t.real()), component(sum_.imag(), x.imag(), t.imag()));
    }
    sum_ = t;
  }
  T value() const { return sum_ + compensation_; }

 private:
  static double component(double s, double x, double t) {
    return std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
  }
  T sum_{};
  T compensation_{};
};

std::vector<std::pair<std::int64_t, int>> squarefree_terms(std::int64_t n, const MobiusTable& mu) {
  if (n > mu.limit()) throw std::out_of_range("mobius table smaller than n");
  std::vector<std::pair<std::int64_t, int>> terms;
  for (std::int64_t k = 1; k <= n; ++k)
    if (mu[k] != 0) terms.emplace_back(k, mu[k]);
  return terms;
}

std::int64_t f_value(std::span<const std::pair<std::int64_t, int>> terms, std::int64_t point) {
  std::int64_t v = 0;
  for (auto [k, sign] : terms)
    if ((point / k) & 1) v += sign;
  return v;
}

std::size_t block_count(std::size_t items) { return (items + kBlockSize - 1) / kBlockSize; }

template <typename T, typename BlockFn>
T blocked_reduce(std::size_t items, BlockFn&& block_sum) {
  const std::size_t blocks = block_count(items);
  std::vector<T> partial(blocks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
    const std::size_t begin = static_cast<std::size_t>(b) * kBlockSize;
    partial[b] = block_sum(begin, std::min(items, begin + kBlockSize));
  }
  CompensatedSum<T> total;
  for (const T& p : partial) total.add(p);
  return total.value();
}

std::int64_t wrap(std::int64_t j, std::size_t period) { return j % static_cast<std::int64_t>(period); }

void check_mellin_range(std::span<const std::int64_t> pattern, std::int64_t lo, std::int64_t hi) {
  if (pattern.empty()) throw std::invalid_argument("mellin_cell_sum: empty pattern");
  if (lo < 1 || hi < lo) throw std::invalid_argument("mellin_cell_sum: need 1 <= lo <= hi");
}

std::complex<double> mellin_block(std::complex<double> s, std::span<const std::int64_t> pattern, std::int64_t lo,
                                  std::int64_t hi) {
  CompensatedSum<std::complex<double>> acc;
  std::complex<double> left = pow_neg(static_cast<double>(lo), s);
  for (std::int64_t j = lo; j < hi; ++j) {
    const std::complex<double> right = pow_neg(static_cast<double>(j + 1), s);
    const std::int64_t v = pattern[wrap(j, pattern.size())];
    if (v != 0) acc.add(static_cast<double>(v) * (left - right));
    left = right;
  }
  return acc.value();
}

double tail_term(const TailCell& c) {
  return c.weight * ((digamma_minus_log(c.hi_scaled) - digamma_minus_log(c.lo_scaled)) + c.log_ratio);
}

}  // namespace

void f_values_serial(std::int64_t n, const MobiusTable& mu, std::span<const std::int64_t> points,
                     std::span<std::int64_t> out) {
  if (out.size() != points.size()) throw std::invalid_argument("f_values: size mismatch");
  if (n > mu.limit()) throw std::out_of_range("mobius table smaller than n");
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::int64_t v = 0;
    for (std::int64_t k = 1; k <= n; ++k)
      if ((points[i] / k) % 2 == 1) v += mu[k];
    out[i] = v;
  }
}

void f_values(std::int64_t n, const MobiusTable& mu, std::span<const std::int64_t> points,
              std::span<std::int64_t> out) {
  if (out.size() != points.size()) throw std::invalid_argument("f_values: size mismatch");
  const auto terms = squarefree_terms(n, mu);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(points.size()); ++i)
    out[i] = f_value(terms, points[i]);
}

Rational exact_sum_serial(std::span<const Rational> terms) { return sum_balanced(terms); }

Rational exact_sum(std::span<const Rational> terms) {
  constexpr std::size_t chunk = 1024;
  if (terms.size() <= chunk) return sum_balanced(terms);
  const std::size_t chunks = (terms.size() + chunk - 1) / chunk;
  std::vector<Rational> partial(chunks);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
    const std::size_t begin = static_cast<std::size_t>(c) * chunk;
    partial[c] = sum_balanced(terms.subspan(begin, std::min(chunk, terms.size() - begin)));
  }
  return sum_balanced(partial);
}

std::complex<double> alternating_power_sum_serial(std::complex<double> s, std::int64_t pairs) {
  CompensatedSum<std::complex<double>> acc;
  for (std::int64_t k = 1; k <= pairs; ++k)
    acc.add(pow_neg(static_cast<double>(2 * k - 1), s) - pow_neg(static_cast<double>(2 * k), s));
  return acc.value();
}

std::complex<double> alternating_power_sum(std::complex<double> s, std::int64_t pairs) {
  if (pairs <= 0) return {0.0, 0.0};
  return blocked_reduce<std::complex<double>>(static_cast<std::size_t>(pairs), [s](std::size_t begin, std::size_t end) {
    CompensatedSum<std::complex<double>> acc;
    for (std::size_t i = begin; i < end; ++i) {
      const auto k = static_cast<double>(i + 1);
      acc.add(pow_neg(2 * k - 1, s) - pow_neg(2 * k, s));
    }
    return acc.value();
  });
}

double digamma_tail_sum_serial(std::span<const TailCell> cells) {
  CompensatedSum<double> acc;
  for (const TailCell& c : cells) acc.add(tail_term(c));
  return acc.value();
}

double digamma_tail_sum(std::span<const TailCell> cells) {
  return blocked_reduce<double>(cells.size(), [cells](std::size_t begin, std::size_t end) {
    CompensatedSum<double> acc;
    for (std::size_t i = begin; i < end; ++i) acc.add(tail_term(cells[i]));
    return acc.value();
  });
}

std::complex<double> mellin_cell_sum_serial(std::complex<double> s, std::span<const std::int64_t> pattern,
                                            std::int64_t lo, std::int64_t hi) {
  check_mellin_range(pattern, lo, hi);
  CompensatedSum<std::complex<double>> acc;
  for (std::int64_t j = lo; j < hi; ++j) {
    const std::int64_t v = pattern[wrap(j, pattern.size())];
    acc.add(static_cast<double>(v) * (pow_neg(static_cast<double>(j), s) - pow_neg(static_cast<double>(j + 1), s)));
  }
  return acc.value();
}

std::complex<double> mellin_cell_sum(std::complex<double> s, std::span<const std::int64_t> pattern,
                                     std::int64_t lo, std::int64_t hi) {
  check_mellin_range(pattern, lo, hi);
  return blocked_reduce<std::complex<double>>(
      static_cast<std::size_t>(hi - lo), [&](std::size_t begin, std::size_t end) {
        return mellin_block(s, pattern, lo + static_cast<std::int64_t>(begin), lo + static_cast<std::int64_t>(end));
      });
}

}  // namespace etacrit::kernels
