#pragma once

// Brute-force ground truth: Fermat quotients and their power sums, the
// modified power sums Ŝ_n(p), factorials and the Wilson quotient.

#include <vector>

#include "supercong/residue.hpp"

namespace supercong {

// q_p(a) = (a^(p-1) - 1)/p mod p^r. Throws NotUnitError if p | a.
Residue fermat_quotient(u64 a, u64 p, int r);

// q_p(1), ..., q_p(p-1) mod p^r (index 0 holds q_p(1)).
std::vector<Residue> fermat_quotients(u64 p, int r);

// Q_p(n) = sum_{a=1}^{p-1} q_p(a)^n mod p^r.
Residue q_power_sum(int n, u64 p, int r);

// Q_p(1), ..., Q_p(nmax) mod p^r in one pass (index 0 holds Q_p(1)).
std::vector<Residue> q_power_sums(int nmax, u64 p, int r);

// Q̃_n = p^(n-1)/n · Q_p(n) mod p^r for n = 1..nmax; requires nmax < p.
std::vector<Residue> q_tilde(int nmax, u64 p, int r);

// Ŝ_n(p) = (S_n(p) - S_0(p))/p mod p^r, with Ŝ_0(p) = 0.
Residue sh_mod(u64 n, u64 p, int r);

// (p-1)! mod p^r.
Residue factorial_mod(u64 p, int r);

struct WilsonRecord {
  u64 p = 0;
  Residue factorial_mod;     // (p-1)! mod p^(r+1)
  Residue wilson_quotient;   // W_p mod p^r
  std::vector<u64> digits;   // base-p digits of factorial_mod, least significant first
};

WilsonRecord wilson_quotient(u64 p, int r);

}  // namespace supercong
