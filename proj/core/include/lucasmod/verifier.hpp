/**
 * @file verifier.hpp
 * @brief Exhaustive sweeps of congruence families against the exact oracle.
 *
 * The verifier enumerates parameter grids per family, evaluates the family's
 * predicted residue, recomputes the same residue through binom_mod (the
 * arbitrary-precision oracle) and records agreement. A prediction is never
 * trusted without the oracle comparison. Grids are enumerated in
 * lexicographic parameter order so "first counterexample" is well defined,
 * and sweeps are deterministic regardless of the worker count.
 */
#ifndef LUCASMOD_VERIFIER_HPP
#define LUCASMOD_VERIFIER_HPP

#include <lucasmod/congruence.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lucasmod {

enum class Family {
  thm11,
  cor12,
  bailey13,
  bailey14,
  lucas,
  two_part,
  eq22,
  eq23,
  eq24,
  ljunggren_p2,
  ljunggren_p3,
};

std::string_view family_name(Family family);

/// Throws std::invalid_argument on an unknown identifier.
Family family_from_name(std::string_view name);

std::vector<Family> all_families();

/// Inclusive parameter bounds for a sweep. The exponent list is read as s
/// for the prime-power families and as f (or e) for the digit-split ones;
/// n_max bounds the parts the congruences leave unconstrained (n, and the
/// high parts of two_part). Combinations with p^s above prime_power_cap are
/// skipped so the exact-oracle integers stay desk-scale.
struct SweepRanges {
  std::vector<std::uint64_t> primes = {2, 3, 5, 7};
  std::vector<unsigned> exponents = {1, 2};
  std::uint64_t n_max = 8;
  std::uint64_t prime_power_cap = 2048;
};

/// One point of a family's parameter grid. Params are held in the family's
/// canonical key order (also the enumeration and output order).
/// hypothesis_ok is false either for instances deliberately violating one
/// designated hypothesis (ablation mode) or for instances outside a stated
/// prime restriction (e.g. p < 5 where only p >= 5 is claimed); the latter
/// are still checked, which is how the extensions beyond the stated range
/// get confirmed empirically.
struct CongruenceInstance {
  Family family;
  std::vector<std::pair<const char*, Integer>> params;
  bool hypothesis_ok = true;
  std::string hypothesis_note;  // short token naming the flag, empty when ok

  /// Throws std::invalid_argument when the key is absent.
  const Integer& param(std::string_view key) const;
};

enum class CheckOutcome {
  pass,      ///< evaluator and oracle agree
  fail,      ///< evaluator and oracle disagree: counterexample
  rejected,  ///< evaluator refused the instance (precondition violated)
};

struct CheckReport {
  CongruenceInstance instance;
  std::optional<Residue> lhs;  ///< oracle residue, absent when rejected
  std::optional<Residue> rhs;  ///< family evaluator residue, absent when rejected
  CheckOutcome outcome = CheckOutcome::rejected;
  /// p-adic valuation of |exact LHS - RHS lift| when the residues differ.
  std::optional<unsigned long> valuation_gap;
  std::string note;  ///< rejection message from the evaluator

  bool passed() const { return outcome == CheckOutcome::pass; }
};

struct SweepSummary {
  Family family;
  SweepRanges ranges;
  std::uint64_t total_checked = 0;  ///< cardinality of the enumerated grid
  std::uint64_t rejected = 0;       ///< rejected instances, never counted as failures
  std::vector<CheckReport> failures;  ///< failing reports in enumeration order
  std::chrono::nanoseconds elapsed{0};
};

/// Materializes the family's grid in lexicographic parameter order. With
/// ablate = true the grid additionally contains instances violating exactly
/// one designated hypothesis each (for example p | r, or m > n), marked
/// hypothesis_ok = false. Throws std::invalid_argument on malformed ranges.
std::vector<CongruenceInstance> enumerate_instances(Family family, const SweepRanges& ranges,
                                                    bool ablate = false);

/// Checks a single instance: family prediction vs exact oracle.
CheckReport check_instance(const CongruenceInstance& instance);

/// Runs the whole grid. The instance set may be partitioned across workers;
/// results are merged back into enumeration order, so the summary is
/// identical to a single-threaded run (elapsed aside).
SweepSummary run_sweep(Family family, const SweepRanges& ranges, bool ablate = false,
                       unsigned workers = 1);

/// Lexicographically first failing instance, or nullopt. Short-circuits.
std::optional<CongruenceInstance> find_counterexample(Family family, const SweepRanges& ranges,
                                                      bool ablate = false);

/// p-adic valuation of the integer difference between the exact LHS and the
/// canonical RHS lift; nullopt when the difference is zero, i.e. the two
/// sides agree exactly (congruent at every power of p).
std::optional<unsigned long> valuation_profile(const CongruenceInstance& instance);

}  // namespace lucasmod

#endif  // LUCASMOD_VERIFIER_HPP
