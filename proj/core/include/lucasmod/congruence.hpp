/**
 * @file congruence.hpp
 * @brief Closed-form evaluators for Lucas-type binomial congruences.
 *
 * Each evaluator computes the predicted residue of a structured binomial
 * coefficient — the right-hand side of one congruence family — without
 * touching the large binomial itself. The verifier compares every prediction
 * against the exact oracle in arith.hpp; nothing here is trusted on its own.
 *
 * Family identifiers used across the library and the CLI:
 *   lucas          C(n, m)                 == prod C(n_i, m_i)            (mod p)
 *   two_part       C(c*p^f + a, d*p^f + b) == C(c,d) * C(a,b)             (mod p^f)
 *   thm11          C(n*p^s, m*p^s + r)     == (-1)^(r-1) r^{-1} (m+1) C(n,m+1) p^s
 *                                                                         (mod p^{s+1})
 *   cor12          C(n*p^s, m*p^s + r)     == (m+1) C(n,m+1) C(p^s, r)    (mod p^{s+1})
 *   bailey13       C(n*p, m*p + i)         == (m+1) C(n,m+1) C(p, i)      (mod p^2)
 *   bailey14       C(n*p^2, m*p^2 + k*p+i) == (m+1) C(n,m+1) C(p^2, kp+i) (mod p^3)
 *   eq22           C(a*p^f + c, b*p^f + d) == C(a,b) * C(c,d)             (mod p)
 *   eq23           C(a*p^e, b*p^e)         == C(a,b)                      (mod p)
 *   eq24           C(p-1, j)               == (-1)^j                      (mod p)
 *   ljunggren_p2   C(n*p, m*p)             == C(n,m)                      (mod p^2)
 *   ljunggren_p3   C(n*p, m*p)             == C(n,m)                      (mod p^3)
 */
#ifndef LUCASMOD_CONGRUENCE_HPP
#define LUCASMOD_CONGRUENCE_HPP

#include <lucasmod/arith.hpp>

#include <cstdint>
#include <optional>

namespace lucasmod {

/// Parameters shared by the thm11 and cor12 families.
struct Thm11Params {
  Prime p;
  unsigned s = 1;
  Integer n;
  Integer m;
  Integer r;

  /// Throws std::domain_error naming the violated hypothesis:
  /// n, m nonnegative; m <= n; s >= 1; 1 <= r <= p^s - 1; p does not divide r.
  void validate() const;
};

/// Parameters of the bailey14 family (r split as k*p + i).
struct Bailey14Params {
  Prime p;
  Integer n;
  Integer m;
  std::uint64_t k = 0;
  std::uint64_t i = 1;

  /// Throws std::domain_error on m > n, k > p-1 or i outside [1, p-1].
  void validate() const;
};

/// Parameters of the two-part split families (two_part and eq22).
/// The two operations read the fields differently: two_part splits the
/// binomial as C(c*p^f + a, d*p^f + b) with small parts a, b; eq22 splits it
/// as C(a*p^f + c, b*p^f + d) with small parts c, d. Validation is therefore
/// per operation, not in the struct.
struct TwoPartParams {
  Prime p;
  unsigned f = 1;
  Integer a;
  Integer b;
  Integer c;
  Integer d;
};

/// Digit-product residue of C(n, m) mod p over aligned base-p expansions.
/// Shorter expansions are padded with zero digits.
Residue lucas_mod_p(const Integer& n, const Integer& m, Prime p);

/// C(c,d) * C(a,b) mod p^f, the predicted residue of C(c*p^f + a, d*p^f + b).
/// Requires f in {1,2,3} and a, b <= p-1. The f >= 2 cases are guaranteed
/// only for p >= 5; smaller primes are evaluated anyway so sweeps can probe
/// the hypothesis (see two_part_stated_for).
Residue lucas_two_part_mod_pf(const TwoPartParams& params);

/// Predicted residue of C(n*p^s, m*p^s + r) mod p^{s+1}:
/// the coefficient (-1)^(r-1) * r^{-1} * (m+1) * C(n, m+1) reduced mod p,
/// then scaled by p^s. Only the coefficient's residue mod p can affect the
/// result, so no big-integer work is needed.
Residue thm11_rhs(const Thm11Params& params);

/// thm11_rhs with an explicit lift of the inverse of r. Any lift
/// x + t*p of mod_inverse(r, p) yields the same residue; exposed so that
/// independence from the chosen lift can be checked directly.
Residue thm11_rhs_with_inverse_lift(const Thm11Params& params, const Integer& r_inverse_lift);

/// (-1)^(r-1) * r^{-1} * p^s mod p^{s+1}, the predicted residue of
/// C(p^s, r). Requires 1 <= r <= p^s - 1 and p not dividing r.
Residue prime_power_binom_fastpath(Prime p, unsigned s, const Integer& r);

enum class Cor12Variant {
  exact,  ///< uses C(p^s, r) computed exactly
  fast,   ///< substitutes prime_power_binom_fastpath for C(p^s, r)
};

/// (m+1) * C(n, m+1) * C(p^s, r) mod p^{s+1}, the predicted residue of
/// C(n*p^s, m*p^s + r). Both variants agree modulo p^{s+1}. Stated for
/// p >= 5; evaluated for every prime (see cor12_stated_for).
Residue cor12_rhs(const Thm11Params& params, Cor12Variant variant = Cor12Variant::exact);

/// (m+1) * C(n, m+1) * C(p, i) mod p^2, the predicted residue of
/// C(n*p, m*p + i). Requires m <= n and 1 <= i <= p-1.
Residue bailey13_rhs(Prime p, const Integer& n, const Integer& m, std::uint64_t i);

/// (m+1) * C(n, m+1) * C(p^2, k*p + i) mod p^3, the predicted residue of
/// C(n*p^2, m*p^2 + k*p + i).
Residue bailey14_rhs(const Bailey14Params& params);

/// C(a,b) * C(c,d) mod p, the predicted residue of C(a*p^f + c, b*p^f + d).
/// Requires c, d <= p^f - 1 and b <= a.
Residue eq22_rhs(const TwoPartParams& params);

/// C(a,b) mod p, the predicted residue of C(a*p^e, b*p^e). Total: b > a
/// falls under the zero convention on both sides.
Residue eq23_rhs(const Integer& a, const Integer& b, Prime p, unsigned e);

/// (-1)^j mod p, the value of C(p-1, j) mod p. Requires 0 <= j <= p-1.
Residue eq24_value(std::uint64_t j, Prime p);

/// C(n,m) mod p^power, the predicted residue of C(n*p, m*p); power is 2 or 3.
/// The power = 3 form is stated for p >= 5 only (see ljunggren_stated_for).
Residue ljunggren_rhs(const Integer& n, const Integer& m, Prime p, unsigned power);

/// Fast-path dispatcher: when n_total = n*p^s and k_total = m*p^s + r with
/// all thm11 hypotheses satisfied, returns the thm11 prediction without any
/// large-binomial work; otherwise returns nullopt so callers fall back to
/// the exact oracle. Tries the given (p, s) only; no search over s.
std::optional<Residue> structured_eval(const Integer& n_total, const Integer& k_total,
                                       Prime p, unsigned s);

// Paper-stated prime restrictions that the evaluators deliberately do not
// enforce. Sweeps use these to mark instances as outside the stated
// hypothesis while still checking them against the oracle.
bool two_part_stated_for(Prime p, unsigned f);
bool cor12_stated_for(Prime p);
bool bailey14_stated_for(Prime p);
bool ljunggren_stated_for(Prime p, unsigned power);

}  // namespace lucasmod

#endif  // LUCASMOD_CONGRUENCE_HPP
