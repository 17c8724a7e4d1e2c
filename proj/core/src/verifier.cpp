#include <lucasmod/verifier.hpp>

#include <algorithm>
#include <array>
#include <exception>
#include <stdexcept>
#include <thread>

namespace lucasmod {

namespace {

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr std::array<FamilyName, 11> kFamilyNames{{
    {Family::thm11, "thm11"},
    {Family::cor12, "cor12"},
    {Family::bailey13, "bailey13"},
    {Family::bailey14, "bailey14"},
    {Family::lucas, "lucas"},
    {Family::two_part, "two_part"},
    {Family::eq22, "eq22"},
    {Family::eq23, "eq23"},
    {Family::eq24, "eq24"},
    {Family::ljunggren_p2, "ljunggren_p2"},
    {Family::ljunggren_p3, "ljunggren_p3"},
}};

}  // namespace

std::string_view family_name(Family family) {
  for (const auto& entry : kFamilyNames) {
    if (entry.family == family) return entry.name;
  }
  throw std::invalid_argument("unknown family value");
}

Family family_from_name(std::string_view name) {
  for (const auto& entry : kFamilyNames) {
    if (entry.name == name) return entry.family;
  }
  throw std::invalid_argument("unknown family: " + std::string(name));
}

std::vector<Family> all_families() {
  std::vector<Family> out;
  out.reserve(kFamilyNames.size());
  for (const auto& entry : kFamilyNames) out.push_back(entry.family);
  return out;
}

const Integer& CongruenceInstance::param(std::string_view key) const {
  for (const auto& [name, value] : params) {
    if (key == name) return value;
  }
  throw std::invalid_argument("instance has no parameter: " + std::string(key));
}

namespace {

std::uint64_t u64_param(const CongruenceInstance& instance, const char* key) {
  return instance.param(key).get_ui();
}

unsigned unsigned_param(const CongruenceInstance& instance, const char* key) {
  return static_cast<unsigned>(u64_param(instance, key));
}

// Emit callback: return false to stop the enumeration.
using EmitFn = std::function<bool(CongruenceInstance&&)>;

struct ValidatedRanges {
  std::vector<std::uint64_t> primes;
  std::vector<unsigned> exponents;
};

ValidatedRanges validate_ranges(const SweepRanges& ranges) {
  if (ranges.primes.empty()) {
    throw std::invalid_argument("sweep ranges: prime list is empty");
  }
  if (ranges.exponents.empty()) {
    throw std::invalid_argument("sweep ranges: exponent list is empty");
  }
  ValidatedRanges out{ranges.primes, ranges.exponents};
  std::sort(out.primes.begin(), out.primes.end());
  out.primes.erase(std::unique(out.primes.begin(), out.primes.end()), out.primes.end());
  std::sort(out.exponents.begin(), out.exponents.end());
  out.exponents.erase(std::unique(out.exponents.begin(), out.exponents.end()),
                      out.exponents.end());
  for (std::uint64_t p : out.primes) {
    const Prime validated(p);  // throws on composites
    (void)validated;
  }
  for (unsigned e : out.exponents) {
    if (e < 1) throw std::invalid_argument("sweep ranges: exponent must be at least 1");
  }
  return out;
}

// p^e when it stays within the cap, nullopt otherwise.
std::optional<std::uint64_t> capped_prime_power(std::uint64_t p, unsigned e, std::uint64_t cap) {
  Integer value;
  mpz_ui_pow_ui(value.get_mpz_t(), p, e);
  if (value > Integer(cap)) return std::nullopt;
  return value.get_ui();
}

CongruenceInstance make_instance(Family family,
                                 std::vector<std::pair<const char*, Integer>>&& params,
                                 const char* note) {
  CongruenceInstance instance{family, std::move(params), note == nullptr, {}};
  if (note != nullptr) instance.hypothesis_note = note;
  return instance;
}

// thm11 and cor12 share the (p, s, n, m, r) grid; cor12 is additionally
// flagged outside its stated hypothesis below p = 5.
bool emit_prime_power_family(Family family, const ValidatedRanges& vr, const SweepRanges& ranges,
                             bool ablate, const EmitFn& emit) {
  const bool flag_small_primes = family == Family::cor12;
  for (std::uint64_t p : vr.primes) {
    for (unsigned s : vr.exponents) {
      const auto ps = capped_prime_power(p, s, ranges.prime_power_cap);
      if (!ps) continue;
      for (std::uint64_t n = 0; n <= ranges.n_max; ++n) {
        const std::uint64_t m_top = ablate ? n + 1 : n;
        for (std::uint64_t m = 0; m <= m_top; ++m) {
          const bool m_violation = m > n;
          for (std::uint64_t r = 1; r + 1 <= *ps; ++r) {
            const bool r_violation = r % p == 0;
            if (r_violation && !ablate) continue;
            if (r_violation && m_violation) continue;  // one violation per instance
            const char* note = nullptr;
            if (r_violation) {
              note = "r_divisible_by_p";
            } else if (m_violation) {
              note = "m_exceeds_n";
            } else if (flag_small_primes && p < 5) {
              note = "p_lt_5";
            }
            if (!emit(make_instance(family,
                                    {{"p", Integer(p)},
                                     {"s", Integer(s)},
                                     {"n", Integer(n)},
                                     {"m", Integer(m)},
                                     {"r", Integer(r)}},
                                    note))) {
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

bool emit_bailey13(const ValidatedRanges& vr, const SweepRanges& ranges, bool ablate,
                   const EmitFn& emit) {
  for (std::uint64_t p : vr.primes) {
    for (std::uint64_t n = 0; n <= ranges.n_max; ++n) {
      const std::uint64_t m_top = ablate ? n + 1 : n;
      for (std::uint64_t m = 0; m <= m_top; ++m) {
        const bool m_violation = m > n;
        for (std::uint64_t i = ablate ? 0 : 1; i + 1 <= p; ++i) {
          const bool i_violation = i == 0;
          if (i_violation && m_violation) continue;
          const char* note = nullptr;
          if (i_violation) {
            note = "i_out_of_range";
          } else if (m_violation) {
            note = "m_exceeds_n";
          }
          if (!emit(make_instance(
                  Family::bailey13,
                  {{"p", Integer(p)}, {"n", Integer(n)}, {"m", Integer(m)}, {"i", Integer(i)}},
                  note))) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool emit_bailey14(const ValidatedRanges& vr, const SweepRanges& ranges, bool ablate,
                   const EmitFn& emit) {
  for (std::uint64_t p : vr.primes) {
    for (std::uint64_t n = 0; n <= ranges.n_max; ++n) {
      const std::uint64_t m_top = ablate ? n + 1 : n;
      for (std::uint64_t m = 0; m <= m_top; ++m) {
        const bool m_violation = m > n;
        for (std::uint64_t k = 0; k + 1 <= p; ++k) {
          for (std::uint64_t i = ablate ? 0 : 1; i + 1 <= p; ++i) {
            const bool i_violation = i == 0;
            if (i_violation && m_violation) continue;
            const char* note = nullptr;
            if (i_violation) {
              note = "i_out_of_range";
            } else if (m_violation) {
              note = "m_exceeds_n";
            } else if (p < 5) {
              note = "p_lt_5";
            }
            if (!emit(make_instance(Family::bailey14,
                                    {{"p", Integer(p)},
                                     {"n", Integer(n)},
                                     {"m", Integer(m)},
                                     {"k", Integer(k)},
                                     {"i", Integer(i)}},
                                    note))) {
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

bool emit_lucas(const ValidatedRanges& vr, const SweepRanges& ranges, const EmitFn& emit) {
  for (std::uint64_t p : vr.primes) {
    for (std::uint64_t n = 0; n <= ranges.n_max; ++n) {
      for (std::uint64_t m = 0; m <= n; ++m) {
        if (!emit(make_instance(Family::lucas,
                                {{"p", Integer(p)}, {"n", Integer(n)}, {"m", Integer(m)}},
                                nullptr))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool emit_two_part(const ValidatedRanges& vr, const SweepRanges& ranges, bool ablate,
                   const EmitFn& emit) {
  for (std::uint64_t p : vr.primes) {
    for (unsigned f : vr.exponents) {
      if (f > 3) continue;  // outside the family's structural range
      if (!capped_prime_power(p, f, ranges.prime_power_cap)) continue;
      const bool small_prime = f >= 2 && p < 5;
      for (std::uint64_t c = 0; c <= ranges.n_max; ++c) {
        for (std::uint64_t d = 0; d <= ranges.n_max; ++d) {
          const std::uint64_t a_top = ablate ? p : p - 1;
          for (std::uint64_t a = 0; a <= a_top; ++a) {
            const bool a_violation = a > p - 1;
            for (std::uint64_t b = 0; b + 1 <= p; ++b) {
              const char* note = nullptr;
              if (a_violation) {
                note = "digit_part_exceeds_p_minus_1";
              } else if (small_prime) {
                note = "p_lt_5_with_f_ge_2";
              }
              if (!emit(make_instance(Family::two_part,
                                      {{"p", Integer(p)},
                                       {"f", Integer(f)},
                                       {"c", Integer(c)},
                                       {"d", Integer(d)},
                                       {"a", Integer(a)},
                                       {"b", Integer(b)}},
                                      note))) {
                return false;
              }
            }
          }
        }
      }
    }
  }
  return true;
}

bool emit_eq22(const ValidatedRanges& vr, const SweepRanges& ranges, bool ablate,
               const EmitFn& emit) {
  for (std::uint64_t p : vr.primes) {
    for (unsigned f : vr.exponents) {
      const auto pf = capped_prime_power(p, f, ranges.prime_power_cap);
      if (!pf) continue;
      const std::uint64_t low_max = *pf - 1;
      for (std::uint64_t a = 0; a <= ranges.n_max; ++a) {
        const std::uint64_t b_top = ablate ? a + 1 : a;
        for (std::uint64_t b = 0; b <= b_top; ++b) {
          const char* note = b > a ? "b_exceeds_a" : nullptr;
          for (std::uint64_t c = 0; c <= low_max; ++c) {
            for (std::uint64_t d = 0; d <= low_max; ++d) {
              if (!emit(make_instance(Family::eq22,
                                      {{"p", Integer(p)},
                                       {"f", Integer(f)},
                                       {"a", Integer(a)},
                                       {"b", Integer(b)},
                                       {"c", Integer(c)},
                                       {"d", Integer(d)}},
                                      note))) {
                return false;
              }
            }
          }
        }
      }
    }
  }
  return true;
}

bool emit_eq23(const ValidatedRanges& vr, const SweepRanges& ranges, const EmitFn& emit) {
  for (std::uint64_t p : vr.primes) {
    for (unsigned e : vr.exponents) {
      if (!capped_prime_power(p, e, ranges.prime_power_cap)) continue;
      // b deliberately runs past a: the zero convention covers b > a on both
      // sides, so those points are valid grid members, not violations.
      for (std::uint64_t a = 0; a <= ranges.n_max; ++a) {
        for (std::uint64_t b = 0; b <= ranges.n_max; ++b) {
          if (!emit(make_instance(
                  Family::eq23,
                  {{"p", Integer(p)}, {"e", Integer(e)}, {"a", Integer(a)}, {"b", Integer(b)}},
                  nullptr))) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool emit_eq24(const ValidatedRanges& vr, bool ablate, const EmitFn& emit) {
  for (std::uint64_t p : vr.primes) {
    const std::uint64_t j_top = ablate ? p : p - 1;
    for (std::uint64_t j = 0; j <= j_top; ++j) {
      const char* note = j > p - 1 ? "j_out_of_range" : nullptr;
      if (!emit(make_instance(Family::eq24, {{"p", Integer(p)}, {"j", Integer(j)}}, note))) {
        return false;
      }
    }
  }
  return true;
}

bool emit_ljunggren(Family family, const ValidatedRanges& vr, const SweepRanges& ranges,
                    bool ablate, const EmitFn& emit) {
  const bool flag_small_primes = family == Family::ljunggren_p3;
  for (std::uint64_t p : vr.primes) {
    for (std::uint64_t n = 0; n <= ranges.n_max; ++n) {
      const std::uint64_t m_top = ablate ? n + 1 : n;
      for (std::uint64_t m = 0; m <= m_top; ++m) {
        const char* note = nullptr;
        if (m > n) {
          note = "m_exceeds_n";
        } else if (flag_small_primes && p < 5) {
          note = "p_lt_5";
        }
        if (!emit(make_instance(family,
                                {{"p", Integer(p)}, {"n", Integer(n)}, {"m", Integer(m)}},
                                note))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool for_each_instance(Family family, const SweepRanges& ranges, bool ablate,
                       const EmitFn& emit) {
  const ValidatedRanges vr = validate_ranges(ranges);
  switch (family) {
    case Family::thm11:
    case Family::cor12:
      return emit_prime_power_family(family, vr, ranges, ablate, emit);
    case Family::bailey13:
      return emit_bailey13(vr, ranges, ablate, emit);
    case Family::bailey14:
      return emit_bailey14(vr, ranges, ablate, emit);
    case Family::lucas:
      return emit_lucas(vr, ranges, emit);
    case Family::two_part:
      return emit_two_part(vr, ranges, ablate, emit);
    case Family::eq22:
      return emit_eq22(vr, ranges, ablate, emit);
    case Family::eq23:
      return emit_eq23(vr, ranges, emit);
    case Family::eq24:
      return emit_eq24(vr, ablate, emit);
    case Family::ljunggren_p2:
    case Family::ljunggren_p3:
      return emit_ljunggren(family, vr, ranges, ablate, emit);
  }
  throw std::invalid_argument("unknown family value");
}

// Oracle side of one check: which binomial to compute and which modulus to
// reduce it by.
struct OraclePlan {
  Integer n;
  Integer k;
  Integer modulus;
  Prime p;
};

OraclePlan oracle_plan(const CongruenceInstance& instance) {
  const Prime p(u64_param(instance, "p"));
  const Integer pz(p.value());
  switch (instance.family) {
    case Family::thm11:
    case Family::cor12: {
      const Integer ps = prime_power(p, unsigned_param(instance, "s"));
      return {instance.param("n") * ps, instance.param("m") * ps + instance.param("r"), ps * pz,
              p};
    }
    case Family::bailey13:
      return {instance.param("n") * pz, instance.param("m") * pz + instance.param("i"),
              prime_power(p, 2), p};
    case Family::bailey14: {
      const Integer p2 = prime_power(p, 2);
      return {instance.param("n") * p2,
              instance.param("m") * p2 + instance.param("k") * pz + instance.param("i"),
              prime_power(p, 3), p};
    }
    case Family::lucas:
      return {instance.param("n"), instance.param("m"), pz, p};
    case Family::two_part: {
      const Integer pf = prime_power(p, unsigned_param(instance, "f"));
      return {instance.param("c") * pf + instance.param("a"),
              instance.param("d") * pf + instance.param("b"), pf, p};
    }
    case Family::eq22: {
      const Integer pf = prime_power(p, unsigned_param(instance, "f"));
      return {instance.param("a") * pf + instance.param("c"),
              instance.param("b") * pf + instance.param("d"), pz, p};
    }
    case Family::eq23: {
      const Integer pe = prime_power(p, unsigned_param(instance, "e"));
      return {instance.param("a") * pe, instance.param("b") * pe, pz, p};
    }
    case Family::eq24:
      return {pz - 1, instance.param("j"), pz, p};
    case Family::ljunggren_p2:
      return {instance.param("n") * pz, instance.param("m") * pz, prime_power(p, 2), p};
    case Family::ljunggren_p3:
      return {instance.param("n") * pz, instance.param("m") * pz, prime_power(p, 3), p};
  }
  throw std::invalid_argument("unknown family value");
}

Residue evaluate_rhs(const CongruenceInstance& instance) {
  const Prime p(u64_param(instance, "p"));
  switch (instance.family) {
    case Family::thm11:
      return thm11_rhs(Thm11Params{p, unsigned_param(instance, "s"), instance.param("n"),
                                   instance.param("m"), instance.param("r")});
    case Family::cor12:
      return cor12_rhs(Thm11Params{p, unsigned_param(instance, "s"), instance.param("n"),
                                   instance.param("m"), instance.param("r")});
    case Family::bailey13:
      return bailey13_rhs(p, instance.param("n"), instance.param("m"),
                          u64_param(instance, "i"));
    case Family::bailey14:
      return bailey14_rhs(Bailey14Params{p, instance.param("n"), instance.param("m"),
                                         u64_param(instance, "k"), u64_param(instance, "i")});
    case Family::lucas:
      return lucas_mod_p(instance.param("n"), instance.param("m"), p);
    case Family::two_part:
      return lucas_two_part_mod_pf(TwoPartParams{p, unsigned_param(instance, "f"),
                                                 instance.param("a"), instance.param("b"),
                                                 instance.param("c"), instance.param("d")});
    case Family::eq22:
      return eq22_rhs(TwoPartParams{p, unsigned_param(instance, "f"), instance.param("a"),
                                    instance.param("b"), instance.param("c"),
                                    instance.param("d")});
    case Family::eq23:
      return eq23_rhs(instance.param("a"), instance.param("b"), p,
                      unsigned_param(instance, "e"));
    case Family::eq24:
      return eq24_value(u64_param(instance, "j"), p);
    case Family::ljunggren_p2:
      return ljunggren_rhs(instance.param("n"), instance.param("m"), p, 2);
    case Family::ljunggren_p3:
      return ljunggren_rhs(instance.param("n"), instance.param("m"), p, 3);
  }
  throw std::invalid_argument("unknown family value");
}

}  // namespace

std::vector<CongruenceInstance> enumerate_instances(Family family, const SweepRanges& ranges,
                                                    bool ablate) {
  std::vector<CongruenceInstance> out;
  for_each_instance(family, ranges, ablate, [&](CongruenceInstance&& instance) {
    out.push_back(std::move(instance));
    return true;
  });
  return out;
}

CheckReport check_instance(const CongruenceInstance& instance) {
  CheckReport report;
  report.instance = instance;
  Residue rhs{Integer(0), Integer(2)};
  try {
    rhs = evaluate_rhs(instance);
  } catch (const std::domain_error& e) {
    report.outcome = CheckOutcome::rejected;
    report.note = e.what();
    return report;
  } catch (const std::invalid_argument& e) {
    report.outcome = CheckOutcome::rejected;
    report.note = e.what();
    return report;
  }
  const OraclePlan plan = oracle_plan(instance);
  const Integer exact = binom_exact(plan.n, plan.k);
  report.lhs = Residue::reduce(exact, plan.modulus);
  report.rhs = rhs;
  if (*report.lhs == rhs) {
    report.outcome = CheckOutcome::pass;
  } else {
    report.outcome = CheckOutcome::fail;
    // The residues differ, so the exact LHS and the RHS lift differ as
    // integers; the gap records how many powers of p the congruence survives.
    report.valuation_gap = padic_valuation(abs(exact - rhs.value), plan.p);
  }
  return report;
}

SweepSummary run_sweep(Family family, const SweepRanges& ranges, bool ablate, unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  SweepSummary summary;
  summary.family = family;
  summary.ranges = ranges;

  if (workers <= 1) {
    for_each_instance(family, ranges, ablate, [&](CongruenceInstance&& instance) {
      CheckReport report = check_instance(instance);
      ++summary.total_checked;
      if (report.outcome == CheckOutcome::rejected) {
        ++summary.rejected;
      } else if (!report.passed()) {
        summary.failures.push_back(std::move(report));
      }
      return true;
    });
  } else {
    const std::vector<CongruenceInstance> instances = enumerate_instances(family, ranges, ablate);
    summary.total_checked = instances.size();
    struct Partial {
      std::uint64_t rejected = 0;
      std::vector<CheckReport> failures;
      std::exception_ptr error;
    };
    std::vector<Partial> partials(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w]() {
        const std::size_t begin = instances.size() * w / workers;
        const std::size_t end = instances.size() * (w + 1) / workers;
        try {
          for (std::size_t idx = begin; idx < end; ++idx) {
            CheckReport report = check_instance(instances[idx]);
            if (report.outcome == CheckOutcome::rejected) {
              ++partials[w].rejected;
            } else if (!report.passed()) {
              partials[w].failures.push_back(std::move(report));
            }
          }
        } catch (...) {
          partials[w].error = std::current_exception();
        }
      });
    }
    for (auto& thread : threads) thread.join();
    // Merge in slice order: identical ordering to a single-threaded run.
    for (auto& partial : partials) {
      if (partial.error) std::rethrow_exception(partial.error);
      summary.rejected += partial.rejected;
      for (auto& failure : partial.failures) summary.failures.push_back(std::move(failure));
    }
  }

  summary.elapsed = std::chrono::steady_clock::now() - start;
  return summary;
}

std::optional<CongruenceInstance> find_counterexample(Family family, const SweepRanges& ranges,
                                                      bool ablate) {
  std::optional<CongruenceInstance> found;
  for_each_instance(family, ranges, ablate, [&](CongruenceInstance&& instance) {
    const CheckReport report = check_instance(instance);
    if (report.outcome == CheckOutcome::fail) {
      found = std::move(instance);
      return false;
    }
    return true;
  });
  return found;
}

std::optional<unsigned long> valuation_profile(const CongruenceInstance& instance) {
  const Residue rhs = evaluate_rhs(instance);
  const OraclePlan plan = oracle_plan(instance);
  const Integer exact = binom_exact(plan.n, plan.k);
  const Integer difference = exact - rhs.value;
  if (difference == 0) return std::nullopt;
  return padic_valuation(abs(difference), plan.p);
}

}  // namespace lucasmod
