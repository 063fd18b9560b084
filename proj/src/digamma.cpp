#include "etacrit/digamma.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace etacrit {

namespace {

constexpr double kAsymptoticThreshold = 16.0;

// B_{2k} / (2k), k = 1..8.
constexpr std::array<double, 8> kBernoulliOver2k = {
    1.0 / 12.0,    -1.0 / 120.0,      1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0,   -691.0 / 32760.0,  1.0 / 12.0,  -3617.0 / 8160.0,
};

// psi(x) - ln x for x >= kAsymptoticThreshold.
double asymptotic_remainder(double x) {
  const double inv2 = 1.0 / (x * x);
  double series = 0.0;
  for (auto it = kBernoulliOver2k.rbegin(); it != kBernoulliOver2k.rend(); ++it)
    series = series * inv2 + *it;
  return -0.5 / x - series * inv2;
}

void check_domain(double x) {
  if (!std::isfinite(x) || x <= 0.0) throw std::domain_error("digamma: argument must be finite and > 0");
}

}  // namespace

double digamma(double x) {
  check_domain(x);
  double shift = 0.0;
  while (x < kAsymptoticThreshold) {
    shift += 1.0 / x;
    x += 1.0;
  }
  return std::log(x) + asymptotic_remainder(x) - shift;
}

double digamma_minus_log(double x) {
  check_domain(x);
  if (x >= kAsymptoticThreshold) return asymptotic_remainder(x);
  double shift = 0.0;
  double y = x;
  while (y < kAsymptoticThreshold) {
    shift += 1.0 / y;
    y += 1.0;
  }
  return asymptotic_remainder(y) + std::log(y / x) - shift;
}

}  // namespace etacrit
