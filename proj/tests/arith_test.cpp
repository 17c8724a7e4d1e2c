#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <lucasmod/arith.hpp>

#include "support/pascal_oracle.hpp"

#include <cstdint>
#include <stdexcept>

using lucasmod::DigitVector;
using lucasmod::Integer;
using lucasmod::Prime;
using lucasmod::PrimePowerModulus;
using lucasmod::Residue;

TEST_CASE("is_prime decides small and large inputs") {
  CHECK(lucasmod::is_prime(2));
  CHECK(lucasmod::is_prime(3));
  CHECK(lucasmod::is_prime(5));
  CHECK(lucasmod::is_prime(7919));
  CHECK_FALSE(lucasmod::is_prime(0));
  CHECK_FALSE(lucasmod::is_prime(1));
  CHECK_FALSE(lucasmod::is_prime(4));
  CHECK_FALSE(lucasmod::is_prime(561));    // Carmichael number
  CHECK_FALSE(lucasmod::is_prime(25326001));  // strong pseudoprime to bases 2,3,5
  CHECK(lucasmod::is_prime((1ull << 61) - 1));  // Mersenne prime
  CHECK(lucasmod::is_prime(9223372036854775783ull));
  CHECK_FALSE(lucasmod::is_prime(9223372036854775781ull));
}

TEST_CASE("Prime construction validates") {
  CHECK(Prime(13).value() == 13);
  CHECK_THROWS_AS(Prime(1), std::invalid_argument);
  CHECK_THROWS_AS(Prime(4), std::invalid_argument);
}

TEST_CASE("digits_base_p canonical expansions") {
  const DigitVector d1 = lucasmod::digits_base_p(10, Prime(3));
  CHECK(d1.digits == std::vector<std::uint64_t>{1, 0, 1});

  const DigitVector d2 = lucasmod::digits_base_p(0, Prime(5));
  CHECK(d2.digits == std::vector<std::uint64_t>{0});

  const DigitVector d3 = lucasmod::digits_base_p(4, Prime(2));
  CHECK(d3.digits == std::vector<std::uint64_t>{0, 0, 1});

  CHECK_THROWS_AS(lucasmod::digits_base_p(Integer(-1), Prime(3)), std::invalid_argument);
}

TEST_CASE("digit expansions recombine to the original value") {
  // Exhaustive up to 10^6 for each base, with digit-range and leading-digit
  // canonicality. Assertions hoisted out of the hot loop.
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    const Prime prime(p);
    std::uint64_t bad = 0;
    for (std::uint64_t n = 0; n < 1000000; ++n) {
      const DigitVector digits = lucasmod::digits_base_p(Integer(n), prime);
      std::uint64_t recombined = 0;
      for (auto it = digits.digits.rbegin(); it != digits.digits.rend(); ++it) {
        if (*it > p - 1) ++bad;
        recombined = recombined * p + *it;
      }
      if (recombined != n) ++bad;
      if (n > 0 && digits.digits.back() == 0) ++bad;
      if (digits.digits.empty()) ++bad;
    }
    CHECK(bad == 0);
  }
  // to_integer agrees on a sample including big values.
  const Integer big("123456789123456789123456789");
  CHECK(lucasmod::digits_base_p(big, Prime(7)).to_integer() == big);
}

TEST_CASE("binom_exact frozen examples") {
  CHECK(lucasmod::binom_exact(0, 0) == 1);
  CHECK(lucasmod::binom_exact(6, 4) == 15);
  CHECK(lucasmod::binom_exact(3, 5) == 0);
  CHECK(lucasmod::binom_exact(10, 0) == 1);
  CHECK_THROWS_AS(lucasmod::binom_exact(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(lucasmod::binom_exact(0, -2), std::invalid_argument);
}

TEST_CASE("binom_exact matches the Pascal-rule oracle up to 300") {
  const lucasmod::testing::PascalTriangle pascal(300);
  std::uint64_t mismatches = 0;
  for (std::size_t n = 0; n <= 300; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      if (lucasmod::binom_exact(n, k) != pascal.at(n, k)) ++mismatches;
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("binom_exact symmetry and Pascal recurrence") {
  std::uint64_t mismatches = 0;
  for (std::uint64_t n = 0; n <= 300; ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) {
      const Integer direct = lucasmod::binom_exact(n, k);
      if (direct != lucasmod::binom_exact(n, n - k)) ++mismatches;
      if (k >= 1 &&
          direct != lucasmod::binom_exact(n - 1, k - 1) + lucasmod::binom_exact(n - 1, k)) {
        ++mismatches;
      }
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("binom_exact cross-checked against GMP's binomial") {
  for (unsigned long n : {500ul, 1000ul, 2048ul, 13310ul}) {
    for (unsigned long k : {0ul, 1ul, 7ul, n / 3, n / 2, n - 1, n}) {
      Integer reference;
      mpz_bin_uiui(reference.get_mpz_t(), n, k);
      CHECK(lucasmod::binom_exact(n, k) == reference);
    }
  }
}

TEST_CASE("binom_exact handles upper indices beyond machine words") {
  const Integer n = Integer(1) << 70;
  const Integer expected = n * (n - 1) * (n - 2) / 6;
  CHECK(lucasmod::binom_exact(n, 3) == expected);
}

TEST_CASE("ratio and coefficient identities hold in exact integers") {
  // (b+1) C(a,b+1) = (a-b) C(a,b) and (b+1) C(a,b+1) = a C(a-1,b);
  // (n-m) n C(n-1,m-1) = m (m+1) C(n,m+1), all multiplicative, no division.
  std::uint64_t mismatches = 0;
  for (std::uint64_t a = 1; a <= 200; ++a) {
    for (std::uint64_t b = 0; b < a; ++b) {
      const Integer lhs = (Integer(b) + 1) * lucasmod::binom_exact(a, b + 1);
      if (lhs != (Integer(a) - b) * lucasmod::binom_exact(a, b)) ++mismatches;
      if (lhs != Integer(a) * lucasmod::binom_exact(a - 1, b)) ++mismatches;
    }
  }
  for (std::uint64_t n = 1; n <= 200; ++n) {
    for (std::uint64_t m = 1; m <= n; ++m) {
      const Integer lhs = (Integer(n) - m) * n * lucasmod::binom_exact(n - 1, m - 1);
      if (lhs != Integer(m) * (m + 1) * lucasmod::binom_exact(n, m + 1)) ++mismatches;
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("binom_mod reduces the exact value") {
  CHECK(lucasmod::binom_mod(6, 4, PrimePowerModulus::make(Prime(3), 2)) ==
        Residue{Integer(6), Integer(9)});
  CHECK(lucasmod::binom_mod(10, 2, PrimePowerModulus::make(Prime(5), 2)) ==
        Residue{Integer(20), Integer(25)});
  CHECK(lucasmod::binom_mod(123456, 0, PrimePowerModulus::make(Prime(7), 3)) ==
        Residue{Integer(1), Integer(343)});
}

TEST_CASE("Residue::reduce canonicalizes, including negatives") {
  CHECK(Residue::reduce(15, 9).value == 6);
  CHECK(Residue::reduce(-1, 9).value == 8);
  CHECK(Residue::reduce(-18, 9).value == 0);
  CHECK_THROWS_AS(Residue::reduce(3, 1), std::invalid_argument);
}

TEST_CASE("PrimePowerModulus holds exact powers") {
  CHECK(PrimePowerModulus::make(Prime(3), 5).value == 243);
  // Way past any machine word, still exact.
  CHECK(PrimePowerModulus::make(Prime(2), 70).value == Integer(1) << 70);
  CHECK(PrimePowerModulus::make(Prime(11), 4).value == 14641);
  CHECK_THROWS_AS(PrimePowerModulus::make(Prime(3), 0), std::invalid_argument);
}

TEST_CASE("mod_inverse contract and canonical range") {
  CHECK(lucasmod::mod_inverse(1, Prime(7)).value == 1);
  CHECK(lucasmod::mod_inverse(3, Prime(7)).value == 5);
  CHECK(lucasmod::mod_inverse(4, Prime(3)).value == 1);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    const Prime prime(p);
    for (std::uint64_t r = 1; r < p; ++r) {
      const Residue inverse = lucasmod::mod_inverse(r, prime);
      CHECK(inverse.value >= 1);
      CHECK(inverse.value <= Integer(p - 1));
      CHECK((Integer(r) * inverse.value) % p == 1);
    }
  }
  CHECK_THROWS_AS(lucasmod::mod_inverse(0, Prime(5)), std::domain_error);
  CHECK_THROWS_AS(lucasmod::mod_inverse(14, Prime(7)), std::domain_error);
}

TEST_CASE("padic_valuation counts prime factors") {
  CHECK(lucasmod::padic_valuation(12, Prime(2)) == 2);
  CHECK(lucasmod::padic_valuation(1, Prime(5)) == 0);
  CHECK(lucasmod::padic_valuation(18, Prime(3)) == 2);
  CHECK(lucasmod::padic_valuation(Integer(1) << 40, Prime(2)) == 40);
  CHECK_THROWS_AS(lucasmod::padic_valuation(0, Prime(3)), std::domain_error);
}
