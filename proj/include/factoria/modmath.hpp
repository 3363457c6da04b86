#pragma once

// Overflow-safe modular kernel: products, factorials and scaled factorials
// modulo m, plus the exponent of a prime in n!.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace factoria {

/// Exclusive upper bound on moduli. Two reduced operands then have a
/// product below 2^124, which the 128-bit reduction handles exactly.
inline constexpr std::uint64_t kModulusBound = std::uint64_t{1} << 62;

class Modulus {
 public:
  explicit constexpr Modulus(std::uint64_t value) : value_(value) {
    if (value < 2) {
      throw std::domain_error("modulus must be >= 2, got " + std::to_string(value));
    }
    if (value >= kModulusBound) {
      throw std::domain_error("modulus must be < 2^62, got " + std::to_string(value));
    }
  }

  constexpr std::uint64_t value() const noexcept { return value_; }

  friend constexpr bool operator==(Modulus, Modulus) = default;

 private:
  std::uint64_t value_;
};

/// A value in [0, m) tagged with its modulus.
class Residue {
 public:
  constexpr Residue(std::uint64_t value, Modulus modulus) : value_(value), modulus_(modulus) {
    if (value >= modulus.value()) {
      throw std::out_of_range("residue " + std::to_string(value) + " not reduced mod " +
                              std::to_string(modulus.value()));
    }
  }

  constexpr std::uint64_t value() const noexcept { return value_; }
  constexpr Modulus modulus() const noexcept { return modulus_; }
  constexpr bool is_zero() const noexcept { return value_ == 0; }

  friend constexpr bool operator==(const Residue&, const Residue&) = default;

 private:
  std::uint64_t value_;
  Modulus modulus_;
};

/// Counts modular multiplications performed by the kernel. Pass one to any
/// kernel or theorem entry point to instrument it; nullptr disables counting.
struct MulCounter {
  std::uint64_t count = 0;
};

namespace detail {

__extension__ typedef unsigned __int128 u128;

inline void tick(MulCounter* counter) noexcept {
  if (counter != nullptr) ++counter->count;
}

// Unchecked a*b mod m for a, b < m.
inline std::uint64_t mulmod_reduced(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  if (m <= (std::uint64_t{1} << 32)) {
    // (m-1)^2 < 2^64
    return (a * b) % m;
  }
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

}  // namespace detail

inline Residue mulmod(std::uint64_t a, std::uint64_t b, Modulus m, MulCounter* counter = nullptr) {
  if (a >= m.value() || b >= m.value()) {
    throw std::out_of_range("mulmod operands must be reduced mod " + std::to_string(m.value()));
  }
  detail::tick(counter);
  return Residue(detail::mulmod_reduced(a, b, m.value()), m);
}

/// k! mod m. Performs one multiplication per factor 1..k and stops as soon as
/// the running product reaches 0, since it stays 0 from then on.
inline Residue factorial_mod(std::uint64_t k, Modulus m, MulCounter* counter = nullptr) {
  const std::uint64_t mod = m.value();
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = detail::mulmod_reduced(acc, i % mod, mod);
    detail::tick(counter);
    if (acc == 0) break;
  }
  return Residue(acc, m);
}

/// (c * k!) mod m.
inline Residue scaled_factorial_mod(std::uint64_t c, std::uint64_t k, Modulus m,
                                    MulCounter* counter = nullptr) {
  const Residue fact = factorial_mod(k, m, counter);
  return mulmod(c % m.value(), fact.value(), m, counter);
}

/// Exponent of the prime p in n! (Legendre's formula).
inline std::uint64_t legendre_valuation(std::uint64_t p, std::uint64_t n) {
  if (p < 2) {
    throw std::domain_error("legendre_valuation needs a prime p >= 2");
  }
  std::uint64_t total = 0;
  // floor(n / p^k) == floor(floor(n / p^(k-1)) / p)
  while (n >= p) {
    n /= p;
    total += n;
  }
  return total;
}

inline constexpr std::uint64_t kExactExpressionMin = 3;
inline constexpr std::uint64_t kExactExpressionMax = 22;

/// Exact 4*(n-3)! + 2 + n for n in [3, 22]; 4*20! no longer fits in 63 bits.
inline std::int64_t exact_expression_value(std::uint64_t n) {
  if (n < kExactExpressionMin || n > kExactExpressionMax) {
    throw std::domain_error("exact_expression_value defined for 3 <= n <= 22, got " +
                            std::to_string(n));
  }
  std::int64_t fact = 1;
  for (std::uint64_t i = 2; i <= n - 3; ++i) fact *= static_cast<std::int64_t>(i);
  return 4 * fact + 2 + static_cast<std::int64_t>(n);
}

}  // namespace factoria
