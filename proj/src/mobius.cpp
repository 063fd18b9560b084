#include "etacrit/mobius.hpp"

#include <stdexcept>
#include <string>

namespace etacrit {

int MobiusTable::at(std::int64_t k) const {
  if (k < 1 || k > limit_)
    throw std::out_of_range("mobius index " + std::to_string(k) + " outside 1.." + std::to_string(limit_));
  return values_[static_cast<std::size_t>(k)];
}

std::int64_t MobiusTable::abs_sum(std::int64_t n) const {
  if (n > limit_) throw std::out_of_range("mobius table too small");
  std::int64_t total = 0;
  for (std::int64_t k = 1; k <= n; ++k) total += values_[static_cast<std::size_t>(k)] != 0;
  return total;
}

MobiusTable mobius_sieve(std::int64_t limit) {
  if (limit < 1) throw std::invalid_argument("mobius_sieve: limit must be >= 1");

  const auto size = static_cast<std::size_t>(limit) + 1;
  std::vector<std::int8_t> mu(size, 0);
  std::vector<std::int64_t> primes;
  std::vector<bool> composite(size, false);
  mu[1] = 1;

  // Every composite m is crossed out exactly once, as p * (m / p) with p its
  // smallest prime factor.
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (std::int64_t p : primes) {
      const std::int64_t m = i * p;
      if (m > limit) break;
      composite[m] = true;
      if (i % p == 0) {
        mu[m] = 0;
        break;
      }
      mu[m] = static_cast<std::int8_t>(-mu[i]);
    }
  }

  MobiusTable table;
  table.limit_ = limit;
  table.values_ = std::move(mu);
  return table;
}

}  // namespace etacrit
