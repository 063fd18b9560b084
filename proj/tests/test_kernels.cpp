#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "etacrit/digamma.hpp"
#include "etacrit/kernels.hpp"
#include "etacrit/nu_step.hpp"

using namespace etacrit;

TEST_CASE("f_values parallel kernel matches the serial reference and nu_eval") {
  const MobiusTable mu = mobius_sieve(64);
  std::vector<std::int64_t> points(20000);
  std::iota(points.begin(), points.end(), std::int64_t{0});
  for (std::int64_t n : {1, 2, 7, 30, 64}) {
    std::vector<std::int64_t> serial(points.size()), parallel(points.size());
    kernels::f_values_serial(n, mu, points, serial);
    kernels::f_values(n, mu, points, parallel);
    CHECK(serial == parallel);
  }
  // f_n on [m, m+1) from the definition, sampled at the rational point m + 1/3
  std::vector<std::int64_t> values(300);
  kernels::f_values(12, mu, std::span(points).first(300), values);
  for (std::int64_t m = 0; m < 300; ++m) {
    std::int64_t direct = 0;
    for (long k = 1; k <= 12; ++k) direct += mu[k] * nu_eval(Rational(3 * m + 1, 3 * k));
    CHECK(values[m] == direct);
  }
}

TEST_CASE("f_values rejects an undersized table") {
  const MobiusTable mu = mobius_sieve(5);
  std::vector<std::int64_t> pts{1, 2}, out(2);
  CHECK_THROWS(kernels::f_values(6, mu, pts, out));
  CHECK_THROWS(kernels::f_values_serial(6, mu, pts, out));
}

TEST_CASE("exact_sum matches the serial binary splitting") {
  std::vector<Rational> terms;
  for (long k = 1; k <= 5000; ++k) terms.emplace_back(k % 2 ? 1 : -1, static_cast<unsigned long>(k));
  const Rational serial = kernels::exact_sum_serial(terms);
  CHECK(kernels::exact_sum(terms) == serial);
  CHECK(std::abs(serial.get_d() - std::log(2.0)) < 1.0 / 5000);
}

TEST_CASE("alternating_power_sum parallel and serial agree") {
  for (auto s : {std::complex<double>(1.0, 0.0), std::complex<double>(0.6, 14.134725), std::complex<double>(2.0, 5.0)}) {
    const auto a = kernels::alternating_power_sum_serial(s, 100000);
    const auto b = kernels::alternating_power_sum(s, 100000);
    CHECK(std::abs(a - b) < 1e-13);
  }
  CHECK(kernels::alternating_power_sum({2.0, 0.0}, 0) == std::complex<double>(0.0, 0.0));
  CHECK(std::abs(kernels::alternating_power_sum({2.0, 0.0}, 1) - 0.75) < 1e-16);
}

TEST_CASE("digamma_tail_sum parallel and serial agree and match plain differences") {
  std::vector<kernels::TailCell> cells;
  double plain = 0.0;
  for (int i = 0; i < 9000; ++i) {
    const double lo = 3.0 + i, hi = lo + 1.0, p = 12.0;
    cells.push_back({lo / p, hi / p, std::log(hi / lo), (i % 3) / p});
    plain += (i % 3) / p * (digamma(hi / p) - digamma(lo / p));
  }
  const double serial = kernels::digamma_tail_sum_serial(cells);
  CHECK(kernels::digamma_tail_sum(cells) == doctest::Approx(serial).epsilon(1e-14));
  CHECK(serial == doctest::Approx(plain).epsilon(1e-11));
}

TEST_CASE("mellin_cell_sum parallel and serial agree") {
  const std::vector<std::int64_t> pattern{0, 1, 3, -2, 0, 5};
  const std::complex<double> s(0.75, 5.0);
  const auto a = kernels::mellin_cell_sum_serial(s, pattern, 1, 50000);
  const auto b = kernels::mellin_cell_sum(s, pattern, 1, 50000);
  CHECK(std::abs(a - b) < 1e-13);
  CHECK(kernels::mellin_cell_sum(s, pattern, 7, 7) == std::complex<double>(0.0, 0.0));
  CHECK_THROWS(kernels::mellin_cell_sum(s, pattern, 0, 10));
  CHECK_THROWS(kernels::mellin_cell_sum(s, std::vector<std::int64_t>{}, 1, 10));
}
