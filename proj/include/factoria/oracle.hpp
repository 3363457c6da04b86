#pragma once

// Ground-truth primality: a sieve of Eratosthenes and plain trial division.
// Deliberately independent of the modular kernel and the congruence tests.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace factoria::oracle {

inline constexpr std::uint64_t kDefaultSieveCap = 100'000'000;

inline bool trial_division_is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Immutable primality table for [0, limit].
class PrimeTable {
 public:
  std::uint64_t limit() const noexcept { return limit_; }

  bool is_prime(std::uint64_t i) const {
    if (i > limit_) {
      throw std::out_of_range("PrimeTable: " + std::to_string(i) + " beyond limit " +
                              std::to_string(limit_));
    }
    return flags_[i] != 0;
  }

  /// n and n+2 both prime; requires n+2 <= limit.
  bool is_twin_start(std::uint64_t n) const { return is_prime(n + 2) && is_prime(n); }

  std::vector<std::uint64_t> primes() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= limit_; ++i) {
      if (flags_[i]) out.push_back(i);
    }
    return out;
  }

  std::uint64_t count() const noexcept {
    std::uint64_t c = 0;
    for (auto f : flags_) c += f;
    return c;
  }

 private:
  friend PrimeTable sieve(std::uint64_t limit, std::uint64_t cap);

  PrimeTable(std::uint64_t limit, std::vector<std::uint8_t> flags)
      : limit_(limit), flags_(std::move(flags)) {}

  std::uint64_t limit_;
  std::vector<std::uint8_t> flags_;
};

inline PrimeTable sieve(std::uint64_t limit, std::uint64_t cap = kDefaultSieveCap) {
  if (limit < 2) {
    throw std::domain_error("sieve limit must be >= 2, got " + std::to_string(limit));
  }
  if (limit > cap) {
    throw std::length_error("sieve limit " + std::to_string(limit) + " exceeds cap " +
                            std::to_string(cap));
  }
  std::vector<std::uint8_t> flags(limit + 1, 1);
  flags[0] = flags[1] = 0;
  for (std::uint64_t i = 2; i <= limit / i; ++i) {
    if (!flags[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) flags[j] = 0;
  }
  return PrimeTable(limit, std::move(flags));
}

using TwinPair = std::pair<std::uint64_t, std::uint64_t>;

/// All (p, p+2) with both prime and p+2 <= limit, ascending.
inline std::vector<TwinPair> twin_pairs_upto(std::uint64_t limit,
                                             std::uint64_t cap = kDefaultSieveCap) {
  if (limit < 5) {
    throw std::domain_error("twin_pairs_upto needs limit >= 5, got " + std::to_string(limit));
  }
  const PrimeTable table = sieve(limit, cap);
  std::vector<TwinPair> out;
  for (std::uint64_t p = 3; p + 2 <= limit; ++p) {
    if (table.is_twin_start(p)) out.emplace_back(p, p + 2);
  }
  return out;
}

}  // namespace factoria::oracle
