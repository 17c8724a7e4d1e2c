/**
 * @file arith.hpp
 * @brief Exact integer, binomial and modular primitives.
 *
 * Everything here is pure and exact: arbitrary-precision integers back all
 * values, and no floating point is used anywhere. These primitives are the
 * foundation both for the congruence evaluators and for the verification
 * oracle, so they stay deliberately small and easy to audit.
 */
#ifndef LUCASMOD_ARITH_HPP
#define LUCASMOD_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace lucasmod {

/// Arbitrary-precision integer used throughout the library.
using Integer = mpz_class;

/// Deterministic primality test, exact for every 64-bit input.
bool is_prime(std::uint64_t candidate) noexcept;

/// A prime number, validated at construction.
class Prime {
 public:
  /// Throws std::invalid_argument unless `value` is prime.
  explicit Prime(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::uint64_t value_;
};

/// Base-p expansion of a nonnegative integer, least-significant digit first.
/// Zero is represented as the single digit [0] so that digit products over
/// an expansion are never empty.
struct DigitVector {
  std::vector<std::uint64_t> digits;
  Prime base;

  /// Recombines digits positionally into the represented integer.
  Integer to_integer() const;
};

/// Canonical representative of a congruence class: 0 <= value < modulus.
struct Residue {
  Integer value;
  Integer modulus;

  /// Reduces an arbitrary integer (negative allowed) into canonical form.
  /// Throws std::invalid_argument when modulus < 2.
  static Residue reduce(const Integer& v, const Integer& modulus);

  friend bool operator==(const Residue&, const Residue&) = default;
};

/// A modulus of the shape p^exponent, with the power held exactly.
struct PrimePowerModulus {
  Prime p;
  unsigned exponent;
  Integer value;

  /// Throws std::invalid_argument when exponent < 1.
  static PrimePowerModulus make(Prime p, unsigned exponent);
};

/// p^exponent as an exact integer.
Integer prime_power(Prime p, unsigned exponent);

/// Base-p digits of n >= 0. Total for valid inputs.
DigitVector digits_base_p(const Integer& n, Prime p);

/// Exact binomial coefficient. C(n,k) = 0 when k > n, C(n,0) = 1.
Integer binom_exact(const Integer& n, const Integer& k);

/// binom_exact reduced modulo a prime power. This is the ground-truth
/// oracle every congruence check compares against.
Residue binom_mod(const Integer& n, const Integer& k, const PrimePowerModulus& m);

/// Inverse of r modulo p, as the canonical representative in [1, p-1].
/// Throws std::domain_error when p divides r.
///
/// Lemma used downstream: every lift x + t*p of the inverse satisfies
/// (x + t*p) * p^s == x * p^s (mod p^{s+1}), so callers that scale the
/// result by p^s may use this canonical representative without loss.
Residue mod_inverse(const Integer& r, Prime p);

/// Largest e with p^e dividing x, for x >= 1.
/// Throws std::domain_error when x < 1 (the valuation of 0 is not a number;
/// callers treat a literal zero difference as congruent to every modulus).
unsigned long padic_valuation(const Integer& x, Prime p);

}  // namespace lucasmod

#endif  // LUCASMOD_ARITH_HPP
