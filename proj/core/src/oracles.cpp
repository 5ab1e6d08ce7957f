#include "supercong/oracles.hpp"

#include "supercong/bernoulli.hpp"

#include <string>

namespace supercong {

Residue fermat_quotient(u64 a, u64 p, int r) {
  const Modulus wide = make_modulus(p, r + 1);
  if (a % p == 0) throw NotUnitError("fermat_quotient: " + std::to_string(p) + " divides " + std::to_string(a));
  const Residue x = Residue(a % wide.value(), wide).pow(p - 1) - Residue::one(wide);
  return shift_down(x, 1);
}

std::vector<Residue> fermat_quotients(u64 p, int r) {
  const Modulus wide = make_modulus(p, r + 1);
  const Modulus mod = make_modulus(p, r);
  const std::vector<u128> table = power_table(p - 1, wide);
  std::vector<Residue> out;
  out.reserve(p - 1);
  for (u64 a = 1; a < p; ++a) {
    // a^(p-1) ≡ 1 mod p, so table[a] >= 1 and p | table[a] - 1.
    out.emplace_back((table[a] - 1) / p, mod);
  }
  return out;
}

std::vector<Residue> q_power_sums(int nmax, u64 p, int r) {
  const Modulus mod = make_modulus(p, r);
  const Montgomery128& mont = mod.montgomery();
  const u128 n = mod.value();
  std::vector<u128> sums(static_cast<std::size_t>(nmax), 0);
  for (const Residue& q : fermat_quotients(p, r)) {
    const u128 base = mont.to_form(q.value());
    u128 x = base;
    for (int k = 0; k < nmax; ++k) {
      sums[k] = sums[k] >= n - x ? sums[k] - (n - x) : sums[k] + x;
      x = mont.mul(x, base);
    }
  }
  std::vector<Residue> out;
  out.reserve(sums.size());
  for (u128 s : sums) out.emplace_back(mont.from_form(s), mod);
  return out;
}

Residue q_power_sum(int n, u64 p, int r) {
  if (n < 1) throw std::out_of_range("q_power_sum: n must be >= 1");
  return q_power_sums(n, p, r).back();
}

std::vector<Residue> q_tilde(int nmax, u64 p, int r) {
  if (static_cast<u64>(nmax) >= p) throw NotUnitError("q_tilde: n must stay below p");
  std::vector<Residue> out = q_power_sums(nmax, p, r);
  for (int n = 1; n <= nmax; ++n) {
    Residue& q = out[static_cast<std::size_t>(n - 1)];
    q = mul_by_p_power(q, n - 1) * inv_unit(Residue::from_int(n, q.modulus()));
  }
  return out;
}

Residue sh_mod(u64 n, u64 p, int r) {
  const Modulus mod = make_modulus(p, r);
  if (n == 0) return Residue::zero(mod);
  const Modulus wide = make_modulus(p, r + 1);
  const Residue diff = power_sum_mod(n, wide) - Residue(p - 1, wide);
  if (valuation(diff).order < 1) {
    throw PrecisionError("Ŝ_" + std::to_string(n) + "(" + std::to_string(p) +
                         ") is not p-integral: S_n(p) and S_0(p) differ mod p");
  }
  return shift_down(diff, 1);
}

Residue factorial_mod(u64 p, int r) {
  const Modulus mod = make_modulus(p, r);
  const Montgomery128& mont = mod.montgomery();
  u128 acc = mont.one();
  for (u64 k = 2; k < p; ++k) acc = mont.mul(acc, mont.to_form(k % mod.value()));
  return Residue(mont.from_form(acc), mod);
}

WilsonRecord wilson_quotient(u64 p, int r) {
  WilsonRecord rec;
  rec.p = p;
  rec.factorial_mod = factorial_mod(p, r + 1);
  const Residue shifted = rec.factorial_mod + Residue::one(rec.factorial_mod.modulus());
  if (valuation(shifted).order < 1) {
    throw PrecisionError("(p-1)! + 1 is not divisible by p for p = " + std::to_string(p));
  }
  rec.wilson_quotient = shift_down(shifted, 1);
  rec.digits = rec.factorial_mod.digits();
  return rec;
}

}  // namespace supercong
