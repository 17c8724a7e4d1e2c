#include <lucasmod/congruence.hpp>

#include <algorithm>
#include <stdexcept>

namespace lucasmod {

namespace {

void require_nonnegative(const Integer& x, const char* name) {
  if (x < 0) {
    throw std::domain_error(std::string(name) + " must be nonnegative");
  }
}

bool divisible_by(const Integer& x, Prime p) {
  return mpz_fdiv_ui(x.get_mpz_t(), p.value()) == 0;
}

}  // namespace

void Thm11Params::validate() const {
  require_nonnegative(n, "n");
  require_nonnegative(m, "m");
  if (s < 1) throw std::domain_error("s must be at least 1");
  if (m > n) throw std::domain_error("m exceeds n");
  const Integer ps = prime_power(p, s);
  if (r < 1 || r > ps - 1) throw std::domain_error("r out of range [1, p^s-1]");
  if (divisible_by(r, p)) throw std::domain_error("r divisible by p");
}

void Bailey14Params::validate() const {
  require_nonnegative(n, "n");
  require_nonnegative(m, "m");
  if (m > n) throw std::domain_error("m exceeds n");
  if (k > p.value() - 1) throw std::domain_error("k out of range [0, p-1]");
  if (i < 1 || i > p.value() - 1) throw std::domain_error("i out of range [1, p-1]");
}

Residue lucas_mod_p(const Integer& n, const Integer& m, Prime p) {
  require_nonnegative(n, "n");
  require_nonnegative(m, "m");
  const Integer modulus(p.value());
  const DigitVector nd = digits_base_p(n, p);
  const DigitVector md = digits_base_p(m, p);
  // Missing digits of the shorter expansion are zero: C(n_i, 0) = 1 keeps the
  // product unchanged, while C(0, m_i) with m_i > 0 annihilates it.
  Integer product = 1;
  const std::size_t width = std::max(nd.digits.size(), md.digits.size());
  for (std::size_t i = 0; i < width && product != 0; ++i) {
    const std::uint64_t ni = i < nd.digits.size() ? nd.digits[i] : 0;
    const std::uint64_t mi = i < md.digits.size() ? md.digits[i] : 0;
    product *= binom_exact(Integer(ni), Integer(mi));
    product %= modulus;
  }
  return Residue::reduce(product, modulus);
}

Residue lucas_two_part_mod_pf(const TwoPartParams& params) {
  require_nonnegative(params.a, "a");
  require_nonnegative(params.b, "b");
  require_nonnegative(params.c, "c");
  require_nonnegative(params.d, "d");
  if (params.f < 1 || params.f > 3) throw std::domain_error("f outside {1, 2, 3}");
  const Integer digit_bound(params.p.value() - 1);
  if (params.a > digit_bound || params.b > digit_bound) {
    throw std::domain_error("digit part exceeds p-1");
  }
  const Integer modulus = prime_power(params.p, params.f);
  return Residue::reduce(binom_exact(params.c, params.d) * binom_exact(params.a, params.b),
                         modulus);
}

Residue thm11_rhs_with_inverse_lift(const Thm11Params& params, const Integer& r_inverse_lift) {
  params.validate();
  const Integer p(params.p.value());
  const Integer ps = prime_power(params.p, params.s);
  const Integer modulus = ps * p;
  // Coefficient (-1)^(r-1) * r^{-1} * (m+1) * C(n, m+1), reduced mod p before
  // scaling by p^s: only its residue class mod p can influence the result.
  Integer coeff = (params.m + 1) * binom_exact(params.n, params.m + 1);
  coeff %= p;
  coeff *= r_inverse_lift;
  if (mpz_even_p(params.r.get_mpz_t())) coeff = -coeff;  // r even -> (-1)^(r-1) = -1
  coeff = Residue::reduce(coeff, p).value;
  return Residue::reduce(coeff * ps, modulus);
}

Residue thm11_rhs(const Thm11Params& params) {
  params.validate();
  return thm11_rhs_with_inverse_lift(params, mod_inverse(params.r, params.p).value);
}

Residue prime_power_binom_fastpath(Prime p, unsigned s, const Integer& r) {
  Thm11Params base{p, s, Integer(1), Integer(0), r};
  base.validate();
  const Integer pz(p.value());
  const Integer ps = prime_power(p, s);
  Integer coeff = mod_inverse(r, p).value;
  if (mpz_even_p(r.get_mpz_t())) coeff = -coeff;
  coeff = Residue::reduce(coeff, pz).value;
  return Residue::reduce(coeff * ps, ps * pz);
}

Residue cor12_rhs(const Thm11Params& params, Cor12Variant variant) {
  params.validate();
  const Integer ps = prime_power(params.p, params.s);
  const Integer modulus = ps * params.p.value();
  const Integer prefix = (params.m + 1) * binom_exact(params.n, params.m + 1);
  const Integer tail = variant == Cor12Variant::exact
                           ? binom_exact(ps, params.r)
                           : prime_power_binom_fastpath(params.p, params.s, params.r).value;
  return Residue::reduce(prefix * tail, modulus);
}

Residue bailey13_rhs(Prime p, const Integer& n, const Integer& m, std::uint64_t i) {
  require_nonnegative(n, "n");
  require_nonnegative(m, "m");
  if (m > n) throw std::domain_error("m exceeds n");
  if (i < 1 || i > p.value() - 1) throw std::domain_error("i out of range [1, p-1]");
  const Integer modulus = prime_power(p, 2);
  const Integer value = (m + 1) * binom_exact(n, m + 1) * binom_exact(Integer(p.value()), Integer(i));
  return Residue::reduce(value, modulus);
}

Residue bailey14_rhs(const Bailey14Params& params) {
  params.validate();
  const Integer p2 = prime_power(params.p, 2);
  const Integer modulus = prime_power(params.p, 3);
  const Integer r = Integer(params.k) * params.p.value() + params.i;
  const Integer value = (params.m + 1) * binom_exact(params.n, params.m + 1) * binom_exact(p2, r);
  return Residue::reduce(value, modulus);
}

Residue eq22_rhs(const TwoPartParams& params) {
  require_nonnegative(params.a, "a");
  require_nonnegative(params.b, "b");
  require_nonnegative(params.c, "c");
  require_nonnegative(params.d, "d");
  if (params.f < 1) throw std::domain_error("f must be at least 1");
  const Integer low_bound = prime_power(params.p, params.f) - 1;
  if (params.c > low_bound || params.d > low_bound) {
    throw std::domain_error("digit part exceeds p^f-1");
  }
  if (params.b > params.a) throw std::domain_error("b exceeds a");
  const Integer modulus(params.p.value());
  return Residue::reduce(binom_exact(params.a, params.b) * binom_exact(params.c, params.d),
                         modulus);
}

Residue eq23_rhs(const Integer& a, const Integer& b, Prime p, unsigned e) {
  require_nonnegative(a, "a");
  require_nonnegative(b, "b");
  if (e < 1) throw std::domain_error("e must be at least 1");
  return Residue::reduce(binom_exact(a, b), Integer(p.value()));
}

Residue eq24_value(std::uint64_t j, Prime p) {
  if (j > p.value() - 1) throw std::domain_error("j out of range [0, p-1]");
  return Residue::reduce(Integer(j % 2 == 0 ? 1 : -1), Integer(p.value()));
}

Residue ljunggren_rhs(const Integer& n, const Integer& m, Prime p, unsigned power) {
  require_nonnegative(n, "n");
  require_nonnegative(m, "m");
  if (power != 2 && power != 3) throw std::domain_error("power must be 2 or 3");
  if (m > n) throw std::domain_error("m exceeds n");
  return Residue::reduce(binom_exact(n, m), prime_power(p, power));
}

std::optional<Residue> structured_eval(const Integer& n_total, const Integer& k_total,
                                       Prime p, unsigned s) {
  require_nonnegative(n_total, "n_total");
  require_nonnegative(k_total, "k_total");
  if (s < 1) throw std::domain_error("s must be at least 1");
  const Integer ps = prime_power(p, s);
  if (!mpz_divisible_p(n_total.get_mpz_t(), ps.get_mpz_t())) return std::nullopt;
  Thm11Params params{p, s, n_total / ps, k_total / ps, k_total % ps};
  if (params.r == 0 || divisible_by(params.r, p)) return std::nullopt;
  if (params.m > params.n) return std::nullopt;
  return thm11_rhs(params);
}

bool two_part_stated_for(Prime p, unsigned f) { return f <= 1 || p.value() >= 5; }

bool cor12_stated_for(Prime p) { return p.value() >= 5; }

bool bailey14_stated_for(Prime p) { return p.value() >= 5; }

bool ljunggren_stated_for(Prime p, unsigned power) { return power <= 2 || p.value() >= 5; }

}  // namespace lucasmod
