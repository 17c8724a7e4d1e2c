#include <lucasmod/arith.hpp>

#include <algorithm>
#include <stdexcept>

namespace lucasmod {

namespace {

std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod_u64(result, base, m);
    base = mul_mod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

// One Miller-Rabin round; n odd, n - 1 = d * 2^r.
bool witness_says_composite(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) {
  std::uint64_t x = pow_mod_u64(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < r; ++i) {
    x = mul_mod_u64(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t candidate) noexcept {
  if (candidate < 2) return false;
  // The fixed witness set below decides primality exactly for all n < 2^64.
  constexpr std::uint64_t witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t w : witnesses) {
    if (candidate % w == 0) return candidate == w;
  }
  std::uint64_t d = candidate - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t w : witnesses) {
    if (witness_says_composite(candidate, w, d, r)) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (!is_prime(value)) {
    throw std::invalid_argument("not a prime: " + std::to_string(value));
  }
}

Integer DigitVector::to_integer() const {
  Integer acc = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    acc *= base.value();
    acc += *it;
  }
  return acc;
}

Residue Residue::reduce(const Integer& v, const Integer& modulus) {
  if (modulus < 2) {
    throw std::invalid_argument("modulus must be at least 2");
  }
  Residue out{Integer{}, modulus};
  // Floor remainder is nonnegative for a positive modulus.
  mpz_fdiv_r(out.value.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

Integer prime_power(Prime p, unsigned exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), p.value(), exponent);
  return out;
}

PrimePowerModulus PrimePowerModulus::make(Prime p, unsigned exponent) {
  if (exponent < 1) {
    throw std::invalid_argument("prime-power exponent must be at least 1");
  }
  return PrimePowerModulus{p, exponent, prime_power(p, exponent)};
}

DigitVector digits_base_p(const Integer& n, Prime p) {
  if (n < 0) {
    throw std::invalid_argument("digits_base_p: n must be nonnegative");
  }
  DigitVector out{{}, p};
  if (n == 0) {
    out.digits.push_back(0);
    return out;
  }
  Integer q = n;
  while (q > 0) {
    out.digits.push_back(mpz_fdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), p.value()));
  }
  return out;
}

namespace {

// first * (first + 1) * ... * (first + count - 1), splitting the range so the
// partial products stay balanced in size.
Integer range_product(const Integer& first, std::uint64_t count) {
  if (count == 0) return 1;
  if (count <= 16) {
    Integer acc = first;
    Integer factor = first;
    for (std::uint64_t i = 1; i < count; ++i) {
      factor += 1;
      acc *= factor;
    }
    return acc;
  }
  const std::uint64_t half = count / 2;
  return range_product(first, half) * range_product(first + half, count - half);
}

}  // namespace

Integer binom_exact(const Integer& n, const Integer& k) {
  if (n < 0 || k < 0) {
    throw std::invalid_argument("binom_exact: arguments must be nonnegative");
  }
  if (k > n) return 0;
  Integer smaller = n - k;
  if (k < smaller) smaller = k;
  if (smaller == 0) return 1;
  if (!smaller.fits_ulong_p()) {
    throw std::overflow_error("binom_exact: min(k, n-k) does not fit a machine word");
  }
  const std::uint64_t count = smaller.get_ui();
  const Integer numerator = range_product(n - smaller + 1, count);
  Integer denominator;
  mpz_fac_ui(denominator.get_mpz_t(), count);
  Integer out;
  mpz_divexact(out.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return out;
}

Residue binom_mod(const Integer& n, const Integer& k, const PrimePowerModulus& m) {
  return Residue::reduce(binom_exact(n, k), m.value);
}

namespace {

// Extended Euclid over machine words; requires 0 < a < m and gcd(a, m) = 1.
std::uint64_t inverse_mod_u64(std::uint64_t a, std::uint64_t m) {
  __int128 old_r = a, r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  __int128 x = old_s % static_cast<__int128>(m);
  if (x < 0) x += m;
  return static_cast<std::uint64_t>(x);
}

}  // namespace

Residue mod_inverse(const Integer& r, Prime p) {
  const std::uint64_t rp = mpz_fdiv_ui(r.get_mpz_t(), p.value());
  if (rp == 0) {
    throw std::domain_error("r divisible by p");
  }
  const std::uint64_t x = inverse_mod_u64(rp, p.value());
  return Residue{Integer(x), Integer(p.value())};
}

unsigned long padic_valuation(const Integer& x, Prime p) {
  if (x < 1) {
    throw std::domain_error("padic_valuation: x must be positive");
  }
  const Integer base(p.value());
  Integer reduced;
  return mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), base.get_mpz_t());
}

}  // namespace lucasmod
