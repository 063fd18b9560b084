#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace etacrit {

/// Möbius values mu(1..limit), sieved once and immutable afterwards.
class MobiusTable {
 public:
  MobiusTable() = default;

  std::int64_t limit() const { return limit_; }

  /// mu(k) for 1 <= k <= limit; throws std::out_of_range otherwise.
  int at(std::int64_t k) const;
  int operator[](std::int64_t k) const { return values_[static_cast<std::size_t>(k)]; }

  /// Indexed 0..limit; slot 0 is unused and holds 0.
  std::span<const std::int8_t> values() const { return values_; }

  /// Number of squarefree k <= n, i.e. sum of |mu(k)|; the pointwise bound
  /// on |f_n|.
  std::int64_t abs_sum(std::int64_t n) const;

 private:
  friend MobiusTable mobius_sieve(std::int64_t limit);
  std::int64_t limit_ = 0;
  std::vector<std::int8_t> values_;
};

/// Linear (smallest-prime-factor) sieve. limit must be >= 1.
MobiusTable mobius_sieve(std::int64_t limit);

}  // namespace etacrit
