#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "factoria/modmath.hpp"
#include "factoria/oracle.hpp"

using namespace factoria;
using boost::multiprecision::cpp_int;

namespace {

std::uint64_t reference_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  cpp_int prod = cpp_int(a) * cpp_int(b);
  return static_cast<std::uint64_t>(prod % m);
}

// Full product without the early exit, one factor at a time.
std::uint64_t naive_factorial_mod(std::uint64_t k, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  for (std::uint64_t i = 1; i <= k; ++i) acc = (acc * (i % m)) % m;
  return acc;
}

}  // namespace

TEST(Modulus, RejectsOutOfRange) {
  EXPECT_THROW(Modulus{0}, std::domain_error);
  EXPECT_THROW(Modulus{1}, std::domain_error);
  EXPECT_THROW(Modulus{kModulusBound}, std::domain_error);
  EXPECT_NO_THROW(Modulus{2});
  EXPECT_NO_THROW(Modulus{kModulusBound - 1});
}

TEST(Residue, MustBeReduced) {
  EXPECT_THROW(Residue(19, Modulus(19)), std::out_of_range);
  EXPECT_EQ(Residue(18, Modulus(19)).value(), 18u);
}

TEST(Mulmod, SmallExamples) {
  EXPECT_EQ(mulmod(0, 17, Modulus(19)).value(), 0u);
  EXPECT_EQ(mulmod(1, 17, Modulus(19)).value(), 17u);
  EXPECT_EQ(mulmod(1, 17, Modulus(19)).modulus().value(), 19u);
}

TEST(Mulmod, RejectsUnreducedOperands) {
  EXPECT_THROW(mulmod(19, 1, Modulus(19)), std::out_of_range);
  EXPECT_THROW(mulmod(1, 20, Modulus(19)), std::out_of_range);
}

TEST(Mulmod, NearTwoToSixtyOne) {
  const std::uint64_t m = 2305843009213693951ull;  // 2^61 - 1
  const std::uint64_t a = m - 1;
  EXPECT_EQ(mulmod(a, a, Modulus(m)).value(), reference_mulmod(a, a, m));
  EXPECT_EQ(mulmod(a, a, Modulus(m)).value(), 1u);  // (-1)^2
  const std::uint64_t big = kModulusBound - 1;
  EXPECT_EQ(mulmod(big - 1, big - 2, Modulus(big)).value(), 2u);
}

TEST(Mulmod, FastPathBoundary) {
  const std::uint64_t m = std::uint64_t{1} << 32;
  EXPECT_EQ(mulmod(m - 1, m - 1, Modulus(m)).value(), reference_mulmod(m - 1, m - 1, m));
  EXPECT_EQ(mulmod(m, m, Modulus(m + 1)).value(), reference_mulmod(m, m, m + 1));
}

TEST(Mulmod, MatchesArbitraryPrecisionOnRandomTriples) {
  std::mt19937_64 rng(0xFAC7);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t m =
        std::uniform_int_distribution<std::uint64_t>((1ull << 61) - 1000, kModulusBound - 1)(rng);
    std::uniform_int_distribution<std::uint64_t> operand(0, m - 1);
    const std::uint64_t a = operand(rng);
    const std::uint64_t b = operand(rng);
    ASSERT_EQ(mulmod(a, b, Modulus(m)).value(), reference_mulmod(a, b, m))
        << a << " * " << b << " mod " << m;
  }
}

TEST(FactorialMod, Examples) {
  EXPECT_EQ(factorial_mod(0, Modulus(5)).value(), 1u);
  EXPECT_EQ(factorial_mod(1, Modulus(5)).value(), 1u);
  EXPECT_EQ(factorial_mod(3, Modulus(8)).value(), 6u);
  EXPECT_EQ(factorial_mod(6, Modulus(11)).value(), 5u);
  for (std::uint64_t m : {2ull, 3ull, 97ull, 1000ull}) {
    EXPECT_EQ(factorial_mod(m, Modulus(m)).value(), 0u) << m;
  }
}

TEST(FactorialMod, ZeroOnceKReachesModulus) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t m = std::uniform_int_distribution<std::uint64_t>(2, 5000)(rng);
    const std::uint64_t k = m + std::uniform_int_distribution<std::uint64_t>(0, 5000)(rng);
    ASSERT_EQ(factorial_mod(k, Modulus(m)).value(), 0u) << k << "! mod " << m;
  }
}

TEST(FactorialMod, EarlyExitAgreesWithNaiveFoldExhaustively) {
  for (std::uint64_t m = 2; m <= 2000; ++m) {
    const Modulus mod(m);
    std::uint64_t naive = 1 % m;
    for (std::uint64_t k = 0; k <= 2000; ++k) {
      if (k > 0) naive = (naive * (k % m)) % m;
      ASSERT_EQ(factorial_mod(k, mod).value(), naive) << k << "! mod " << m;
    }
  }
}

TEST(FactorialMod, CountsOneMultiplicationPerFactorUntilZero) {
  MulCounter prime;
  (void)factorial_mod(100, Modulus(101), &prime);
  EXPECT_EQ(prime.count, 100u);

  // 10 = 2 * 5: the product hits 0 at factor 5.
  MulCounter composite;
  EXPECT_EQ(factorial_mod(100, Modulus(10), &composite).value(), 0u);
  EXPECT_EQ(composite.count, 5u);
}

TEST(ScaledFactorialMod, Examples) {
  EXPECT_EQ(scaled_factorial_mod(4, 3, Modulus(8)).value(), 0u);
  EXPECT_EQ(scaled_factorial_mod(4, 6, Modulus(11)).value(), 9u);
  EXPECT_EQ(scaled_factorial_mod(4, 0, Modulus(5)).value(), 4u);
  // c larger than the modulus is reduced first
  EXPECT_EQ(scaled_factorial_mod(15, 2, Modulus(7)).value(), 2u);
  EXPECT_EQ(scaled_factorial_mod(0, 9, Modulus(7)).value(), 0u);
}

TEST(ScaledFactorialMod, MatchesNaive) {
  for (std::uint64_t m = 2; m <= 300; ++m) {
    for (std::uint64_t k = 0; k <= 300; k += 7) {
      for (std::uint64_t c : {0ull, 1ull, 4ull, 1000003ull}) {
        ASSERT_EQ(scaled_factorial_mod(c, k, Modulus(m)).value(),
                  ((c % m) * naive_factorial_mod(k, m)) % m);
      }
    }
  }
}

TEST(LegendreValuation, Examples) {
  EXPECT_EQ(legendre_valuation(5, 25), 6u);
  EXPECT_EQ(legendre_valuation(5, 20), 4u);
  EXPECT_EQ(legendre_valuation(7, 6), 0u);
  EXPECT_EQ(legendre_valuation(2, 0), 0u);
  EXPECT_EQ(legendre_valuation(2, 10), 8u);  // 10! = 2^8 * 14175
  EXPECT_THROW(legendre_valuation(1, 10), std::domain_error);
}

TEST(LegendreValuation, MatchesDirectFactorCount) {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    std::uint64_t direct = 0;
    for (std::uint64_t n = 0; n <= 3000; ++n) {
      for (std::uint64_t x = n; n > 0 && x % p == 0; x /= p) ++direct;
      ASSERT_EQ(legendre_valuation(p, n), direct) << "v_" << p << "(" << n << "!)";
    }
  }
}

TEST(LegendreValuation, SquaredPrimeCounts) {
  for (std::uint64_t p = 5; p <= 100; ++p) {
    if (!oracle::trial_division_is_prime(p)) continue;
    EXPECT_EQ(legendre_valuation(p, p * p), p + 1) << p;
    EXPECT_EQ(legendre_valuation(p, p * p - 5), p - 1) << p;
  }
}

TEST(ExactExpressionValue, Examples) {
  EXPECT_EQ(exact_expression_value(3), 9);
  EXPECT_EQ(exact_expression_value(5), 15);
  EXPECT_EQ(exact_expression_value(13), 14515215);
  EXPECT_EQ(exact_expression_value(22), 486580401635328024);  // 4*19! + 24
}

TEST(ExactExpressionValue, DomainIsThreeToTwentyTwo) {
  EXPECT_THROW(exact_expression_value(2), std::domain_error);
  EXPECT_THROW(exact_expression_value(23), std::domain_error);
}

TEST(ExactExpressionValue, AgreesWithResidueRoute) {
  for (std::uint64_t n = 3; n <= 22; ++n) {
    const Modulus mod(n);
    const std::uint64_t via_residue =
        (scaled_factorial_mod(4, n - 3, mod).value() + (2 + n) % n) % n;
    EXPECT_EQ(static_cast<std::uint64_t>(exact_expression_value(n)) % n, via_residue) << n;
  }
}
