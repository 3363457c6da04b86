#pragma once

// Factorial-congruence primality and twin-prime tests.
//
// Each test comes in a raw form, which reports its congruence verbatim, and a
// corrected form, which overrides the verdict on the test's known exception
// set and flags that it did so. The witness residues are always the ones the
// congruence actually produced.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "factoria/method.hpp"
#include "factoria/modmath.hpp"

namespace factoria {

struct PrimalityVerdict {
  std::uint64_t n;
  bool is_prime;
  Method method;
  Residue witness;
  bool exception_applied;
};

struct TwinVerdict {
  std::uint64_t n;
  Residue residue_mod_n;
  Residue residue_mod_n_plus_2;
  bool is_twin_pair;
  Method method;
  bool exception_applied;
};

/// Inputs where 4(m-5)! mod m != 0 yet m is composite.
inline constexpr std::array<std::uint64_t, 2> kTheorem1Exceptions = {6, 9};
/// Input where n | 4(n-3)!+n+2 and (n+2) does not, yet n+2 is composite.
inline constexpr std::array<std::uint64_t, 1> kTheorem2Exceptions = {7};

namespace detail {

inline void require_at_least(Method method, std::uint64_t n) {
  if (n < domain_floor(method)) {
    throw std::domain_error(std::string(to_string(method)) + " requires n >= " +
                            std::to_string(domain_floor(method)) + ", got " + std::to_string(n));
  }
}

template <std::size_t N>
constexpr bool contains(const std::array<std::uint64_t, N>& set, std::uint64_t n) noexcept {
  for (std::uint64_t v : set) {
    if (v == n) return true;
  }
  return false;
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  // a, b < m < 2^62, so a + b cannot wrap.
  const std::uint64_t s = a + b;
  return s >= m ? s - m : s;
}

}  // namespace detail

/// n >= 2 is prime iff (n-1)! + 1 == 0 (mod n).
inline PrimalityVerdict wilson_test(std::uint64_t n, MulCounter* counter = nullptr) {
  detail::require_at_least(Method::wilson, n);
  const Modulus mod(n);
  const Residue fact = factorial_mod(n - 1, mod, counter);
  const Residue witness(detail::addmod(fact.value(), 1 % n, n), mod);
  return {n, witness.is_zero(), Method::wilson, witness, false};
}

/// m >= 5 is reported prime iff m does not divide 4(m-5)!.
inline PrimalityVerdict theorem1_raw(std::uint64_t m, MulCounter* counter = nullptr) {
  detail::require_at_least(Method::theorem1, m);
  const Residue witness = scaled_factorial_mod(4, m - 5, Modulus(m), counter);
  return {m, !witness.is_zero(), Method::theorem1, witness, false};
}

inline PrimalityVerdict theorem1_test(std::uint64_t m, MulCounter* counter = nullptr) {
  PrimalityVerdict verdict = theorem1_raw(m, counter);
  if (detail::contains(kTheorem1Exceptions, m)) {
    verdict.is_prime = false;
    verdict.exception_applied = true;
  }
  return verdict;
}

/// n and n+2 are twin primes iff 4((n-1)!+1) + n == 0 (mod n(n+2)).
///
/// The congruence is evaluated once modulo n(n+2); the two stored residues are
/// reductions of that single result.
inline TwinVerdict clement_test(std::uint64_t n, MulCounter* counter = nullptr) {
  detail::require_at_least(Method::clement, n);
  if (n + 2 > (kModulusBound - 1) / n) {
    throw std::domain_error("clement_test: n(n+2) must be < 2^62, got n = " + std::to_string(n));
  }
  const Modulus pair_mod(n * (n + 2));
  const std::uint64_t pm = pair_mod.value();
  const Residue fact = factorial_mod(n - 1, pair_mod, counter);
  const std::uint64_t wilson_term = detail::addmod(fact.value(), 1, pm);
  const Residue scaled = mulmod(4, wilson_term, pair_mod, counter);
  const std::uint64_t value = detail::addmod(scaled.value(), n, pm);
  return {n,
          Residue(value % n, Modulus(n)),
          Residue(value % (n + 2), Modulus(n + 2)),
          value == 0,
          Method::clement,
          false};
}

/// n and n+2 are reported twin primes iff n divides 4(n-3)!+2+n and n+2 does
/// not. Both residues come from a single walk of (n-3)! with one accumulator
/// per modulus.
inline TwinVerdict theorem2_raw(std::uint64_t n, MulCounter* counter = nullptr) {
  detail::require_at_least(Method::theorem2, n);
  const Modulus mod_lo(n);
  const Modulus mod_hi(n + 2);
  const std::uint64_t lo = mod_lo.value();
  const std::uint64_t hi = mod_hi.value();

  std::uint64_t acc_lo = 1;
  std::uint64_t acc_hi = 1;
  const std::uint64_t k = n - 3;
  for (std::uint64_t i = 1; i <= k && (acc_lo != 0 || acc_hi != 0); ++i) {
    if (acc_lo != 0) {
      acc_lo = detail::mulmod_reduced(acc_lo, i % lo, lo);
      detail::tick(counter);
    }
    if (acc_hi != 0) {
      acc_hi = detail::mulmod_reduced(acc_hi, i % hi, hi);
      detail::tick(counter);
    }
  }

  const std::uint64_t r_lo =
      detail::addmod(mulmod(4 % lo, acc_lo, mod_lo, counter).value(), (n + 2) % lo, lo);
  const std::uint64_t r_hi =
      detail::addmod(mulmod(4 % hi, acc_hi, mod_hi, counter).value(), (n + 2) % hi, hi);
  const Residue res_lo(r_lo, mod_lo);
  const Residue res_hi(r_hi, mod_hi);
  return {n, res_lo, res_hi, res_lo.is_zero() && !res_hi.is_zero(), Method::theorem2, false};
}

inline TwinVerdict theorem2_test(std::uint64_t n, MulCounter* counter = nullptr) {
  TwinVerdict verdict = theorem2_raw(n, counter);
  if (detail::contains(kTheorem2Exceptions, n)) {
    verdict.is_twin_pair = false;
    verdict.exception_applied = true;
  }
  return verdict;
}

}  // namespace factoria
