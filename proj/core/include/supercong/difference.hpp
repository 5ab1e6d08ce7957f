#pragma once

// Forward differences with step h over integer-indexed residue sequences.

#include <functional>

#include "supercong/residue.hpp"

namespace supercong {

// Evaluated lazily: forward_difference calls it at exactly n + 1 points.
using IndexedSequence = std::function<Residue(long)>;

// Δ_h^n f(s) = sum_{v=0}^{n} binom(n, v) (-1)^(n-v) f(s + v·h).
// The result has the precision of the least precise sample.
Residue forward_difference(const IndexedSequence& f, long h, int n, long s);

// Δ_{p-1}^n binom(v, k) at v = 0, reduced mod p. Requires k, n >= 1 and
// p > k; the value equals (-1)^k binom(k-1, n-1) mod p.
Residue binom_diff_mod_p(int k, int n, u64 p);

// Q_p(n) mod p^r evaluated as ∂_p^(n-1) Δ_{p-1}^n Ŝ_v(p) at v = 0. Works at
// precision r + n internally; throws OverflowError if p^(r+n) does not fit.
Residue qp_operator_form(int n, u64 p, int r);

}  // namespace supercong
