// Command-line frontend: exact binomial evaluation, congruence-based fast
// evaluation, family verification sweeps and a fast-path benchmark.
//
// Exit codes: 0 success / all checks pass, 1 counterexample found,
// 2 usage or precondition error.

#include <lucasmod/verifier.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using lucasmod::CheckOutcome;
using lucasmod::CheckReport;
using lucasmod::CongruenceInstance;
using lucasmod::Integer;
using lucasmod::Prime;
using lucasmod::PrimePowerModulus;
using lucasmod::Residue;
using lucasmod::SweepRanges;
using lucasmod::Thm11Params;

Integer parse_nonnegative(const std::string& text, const char* name) {
  Integer value;
  try {
    value = Integer(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(std::string(name) + " is not a decimal integer: " + text);
  }
  if (value < 0) {
    throw std::invalid_argument(std::string(name) + " must be nonnegative");
  }
  return value;
}

std::uint64_t parse_u64(const std::string& text, const char* name) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(name) + " is not an unsigned integer: " + text);
  }
  if (used != text.size()) {
    throw std::invalid_argument(std::string(name) + " is not an unsigned integer: " + text);
  }
  return value;
}

// Modulus spec "p^e" (or a bare prime for e = 1); the base must be prime,
// composite moduli are never factored.
PrimePowerModulus parse_modulus(const std::string& text) {
  const auto caret = text.find('^');
  const std::string base_text = caret == std::string::npos ? text : text.substr(0, caret);
  const std::string exp_text = caret == std::string::npos ? "1" : text.substr(caret + 1);
  const std::uint64_t base = parse_u64(base_text, "modulus base");
  const std::uint64_t exponent = parse_u64(exp_text, "modulus exponent");
  if (exponent < 1 || exponent > 1u << 20) {
    throw std::invalid_argument("modulus exponent out of range: " + exp_text);
  }
  return PrimePowerModulus::make(Prime(base), static_cast<unsigned>(exponent));
}

std::string human(const Residue& residue) {
  std::ostringstream out;
  out << residue.value << " (mod " << residue.modulus << ")";
  return out.str();
}

// One record per line, fixed key order:
//   family, params..., modulus, lhs, rhs, pass [, valuation_gap]
//   [, hypothesis_ok, note]; rejected instances carry rejected/note instead
//   of lhs/rhs/pass. Values are plain decimal integers.
std::string render_check_line(const CheckReport& report) {
  std::ostringstream out;
  out << "family=" << lucasmod::family_name(report.instance.family);
  for (const auto& [key, value] : report.instance.params) {
    out << ' ' << key << '=' << value;
  }
  if (report.outcome == CheckOutcome::rejected) {
    out << " rejected=true hypothesis_ok=false";
    if (!report.instance.hypothesis_note.empty()) {
      out << " note=" << report.instance.hypothesis_note;
    }
    return out.str();
  }
  out << " modulus=" << report.rhs->modulus << " lhs=" << report.lhs->value
      << " rhs=" << report.rhs->value << " pass=" << (report.passed() ? "true" : "false");
  if (report.valuation_gap) {
    out << " valuation_gap=" << *report.valuation_gap;
  }
  if (!report.instance.hypothesis_ok) {
    out << " hypothesis_ok=false note=" << report.instance.hypothesis_note;
  }
  return out.str();
}

struct BinomArgs {
  std::string n;
  std::string k;
  std::string mod;
};

int run_binom(const BinomArgs& args) {
  const Integer n = parse_nonnegative(args.n, "n");
  const Integer k = parse_nonnegative(args.k, "k");
  if (args.mod.empty()) {
    std::cout << lucasmod::binom_exact(n, k) << '\n';
  } else {
    std::cout << human(lucasmod::binom_mod(n, k, parse_modulus(args.mod))) << '\n';
  }
  return 0;
}

struct EvalArgs {
  std::uint64_t p = 0;
  unsigned s = 1;
  std::string n;
  std::string m;
  std::string r;
  std::string method = "theorem";
};

int run_eval(const EvalArgs& args) {
  const Prime p(args.p);
  const Thm11Params params{p, args.s, parse_nonnegative(args.n, "n"),
                           parse_nonnegative(args.m, "m"), parse_nonnegative(args.r, "r")};
  Residue result{Integer(0), Integer(2)};
  if (args.method == "exact") {
    if (args.s < 1) throw std::domain_error("s must be at least 1");
    const Integer ps = lucasmod::prime_power(p, args.s);
    result = lucasmod::binom_mod(params.n * ps, params.m * ps + params.r,
                                 PrimePowerModulus::make(p, args.s + 1));
  } else if (args.method == "theorem") {
    result = lucasmod::thm11_rhs(params);
  } else {
    result = lucasmod::cor12_rhs(params);
  }
  std::cout << human(result) << '\n';
  return 0;
}

struct VerifyArgs {
  std::string family;
  std::vector<std::uint64_t> primes = {2, 3, 5, 7};
  std::vector<unsigned> exponents = {1, 2};
  std::uint64_t n_max = 8;
  std::uint64_t ps_cap = 2048;
  bool ablate = false;
  unsigned workers = 1;
  std::string format = "summary";
};

int run_verify(const VerifyArgs& args) {
  const lucasmod::Family family = lucasmod::family_from_name(args.family);
  const SweepRanges ranges{args.primes, args.exponents, args.n_max, args.ps_cap};

  if (args.format == "lines") {
    std::uint64_t failures = 0;
    for (const CongruenceInstance& instance :
         lucasmod::enumerate_instances(family, ranges, args.ablate)) {
      const CheckReport report = lucasmod::check_instance(instance);
      if (report.outcome == CheckOutcome::fail) ++failures;
      std::cout << render_check_line(report) << '\n';
    }
    return failures > 0 ? 1 : 0;
  }

  const lucasmod::SweepSummary summary =
      lucasmod::run_sweep(family, ranges, args.ablate, args.workers);
  const auto elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(summary.elapsed).count();
  std::cout << "family=" << lucasmod::family_name(family) << " total=" << summary.total_checked
            << " failures=" << summary.failures.size() << " rejected=" << summary.rejected
            << " elapsed_ms=" << elapsed_ms << '\n';
  if (!summary.failures.empty()) {
    std::cout << "first_failure: " << render_check_line(summary.failures.front()) << '\n';
  }
  return summary.failures.empty() ? 0 : 1;
}

struct BenchArgs {
  std::uint64_t p = 0;
  unsigned s = 1;
  std::string n;
  std::string m;
  std::string r;
  unsigned reps = 100;
};

int run_bench(const BenchArgs& args) {
  if (args.reps < 1) throw std::invalid_argument("reps must be at least 1");
  const Prime p(args.p);
  const Thm11Params params{p, args.s, parse_nonnegative(args.n, "n"),
                           parse_nonnegative(args.m, "m"), parse_nonnegative(args.r, "r")};
  params.validate();
  const Integer ps = lucasmod::prime_power(p, args.s);
  const Integer big_n = params.n * ps;
  const Integer big_k = params.m * ps + params.r;
  const PrimePowerModulus modulus = PrimePowerModulus::make(p, args.s + 1);

  const Residue theorem = lucasmod::thm11_rhs(params);
  const Residue exact = lucasmod::binom_mod(big_n, big_k, modulus);
  const bool agree = theorem == exact;

  const auto time_ns = [&](auto&& body) {
    const auto start = std::chrono::steady_clock::now();
    for (unsigned rep = 0; rep < args.reps; ++rep) body();
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  };
  Integer sink = 0;  // keeps the timed calls observable
  const auto theorem_ns = time_ns([&] { sink += lucasmod::thm11_rhs(params).value; });
  const auto exact_ns = time_ns([&] { sink += lucasmod::binom_mod(big_n, big_k, modulus).value; });

  std::cout << "instance: p=" << args.p << " s=" << args.s << " n=" << params.n
            << " m=" << params.m << " r=" << params.r << " reps=" << args.reps << '\n';
  std::cout << "method=theorem total_ns=" << theorem_ns
            << " per_call_ns=" << theorem_ns / args.reps << '\n';
  std::cout << "method=exact total_ns=" << exact_ns << " per_call_ns=" << exact_ns / args.reps
            << '\n';
  const double ratio =
      theorem_ns > 0 ? static_cast<double>(exact_ns) / static_cast<double>(theorem_ns)
                     : static_cast<double>(exact_ns);
  std::cout << "ratio=" << std::fixed << std::setprecision(2) << ratio << '\n';
  std::cout << "residue=" << theorem.value << " modulus=" << theorem.modulus
            << " agree=" << (agree ? "true" : "false") << '\n';
  return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binomial coefficients modulo prime powers: exact evaluation, "
               "congruence fast paths, and exhaustive verification"};
  app.require_subcommand(1);
  int exit_code = 0;

  BinomArgs binom_args;
  auto* binom = app.add_subcommand("binom", "Exact or reduced binomial coefficient");
  binom->add_option("--n", binom_args.n, "Upper index")->required();
  binom->add_option("--k", binom_args.k, "Lower index")->required();
  binom->add_option("--mod", binom_args.mod, "Prime-power modulus, written p^e");
  binom->callback([&] { exit_code = run_binom(binom_args); });

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Residue of C(n*p^s, m*p^s + r) mod p^{s+1}");
  eval->add_option("--p", eval_args.p, "Prime")->required();
  eval->add_option("--s", eval_args.s, "Exponent s >= 1")->required();
  eval->add_option("--n", eval_args.n, "n")->required();
  eval->add_option("--m", eval_args.m, "m")->required();
  eval->add_option("--r", eval_args.r, "r, coprime to p")->required();
  eval->add_option("--method", eval_args.method, "exact | theorem | corollary")
      ->check(CLI::IsMember({"exact", "theorem", "corollary"}));
  eval->callback([&] { exit_code = run_eval(eval_args); });

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Sweep one congruence family against the oracle");
  verify->add_option("--family", verify_args.family, "Family identifier")->required();
  verify->add_option("--p", verify_args.primes, "Primes, comma separated")->delimiter(',');
  verify->add_option("--s", verify_args.exponents, "Exponents, comma separated")->delimiter(',');
  verify->add_option("--n-max", verify_args.n_max, "Inclusive bound on unconstrained parts");
  verify->add_option("--ps-cap", verify_args.ps_cap, "Skip (p, s) with p^s above this");
  verify->add_flag("--ablate", verify_args.ablate,
                   "Also enumerate instances violating one designated hypothesis");
  verify->add_option("--workers", verify_args.workers, "Parallel workers (summary mode)");
  verify->add_option("--format", verify_args.format, "lines | summary")
      ->check(CLI::IsMember({"lines", "summary"}));
  verify->callback([&] { exit_code = run_verify(verify_args); });

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time the congruence fast path against the oracle");
  bench->add_option("--p", bench_args.p, "Prime")->required();
  bench->add_option("--s", bench_args.s, "Exponent s >= 1")->required();
  bench->add_option("--n", bench_args.n, "n")->required();
  bench->add_option("--m", bench_args.m, "m")->required();
  bench->add_option("--r", bench_args.r, "r, coprime to p")->required();
  bench->add_option("--reps", bench_args.reps, "Repetitions per method");
  bench->callback([&] { exit_code = run_bench(bench_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int cli_code = app.exit(e);
    return cli_code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
