#pragma once

// Right-hand sides of the supercongruences: ω ladders for (p-1)!, the
// power-sum congruences for Q̃_n = p^(n-1)/n · Q_p(n), the ψ/P̃ tables and the
// zero expressions used to simplify the ω forms. Every displayed formula is
// kept as text and parsed once into a MultiPoly; rational constants stay exact
// until evaluation.

#include <array>
#include <string>
#include <vector>

#include "supercong/bernoulli.hpp"
#include "supercong/check_result.hpp"
#include "supercong/multipoly.hpp"

namespace supercong {

// Binds B1..B6, B1_2..B4_2, B1_4, B2_4 to the entries of a cache.
MultiPoly::Binding bernoulli_binding(const DividedBernoulliSet& set);
Residue evaluate_form(const MultiPoly& form, const DividedBernoulliSet& set, int precision);

// ---- ω coefficients -------------------------------------------------------

struct OmegaForm {
  std::string text;
  int precision;  // the form is only claimed mod p^precision
};

// Formulas for ω_1..ω_5 (theorem = 1, mod p^6) or ω_1..ω_6 (theorem = 2, mod p^7).
const std::vector<OmegaForm>& omega_forms(int theorem);

struct OmegaVector {
  u64 p = 0;
  int top = 0;                  // (p-1)! is matched mod p^top
  std::vector<Residue> omegas;  // omegas[v] mod p^(top - v); omegas[0] = -1

  // sum_{v<=k} ω_v p^v mod p^(k+1).
  Residue partial_factorial_sum(int k) const;
  Residue factorial_sum() const { return partial_factorial_sum(top - 1); }
  // sum_{v>=1} ω_v p^(v-1) mod p^(top-1).
  Residue wilson_sum() const;
};

// Throws MissingEntryError when the cache lacks an entry, NotPrimeError when
// p is below the bound (7 for the mod p^6 ladder, 11 for mod p^7).
OmegaVector omega_thm1(const DividedBernoulliSet& set);
OmegaVector omega_thm2(const DividedBernoulliSet& set);

// ---- power sums of Fermat quotients ---------------------------------------

// Which factor multiplies the leading difference in the reduced n = 5 form.
enum class Lead { published, p_minus_one };

// Right side for Q̃_n mod p^level, level 5 (n <= 5, p >= 7) or 6 (n <= 6,
// p >= 11). The p_minus_one lead only differs for (n, level) = (5, 5).
Residue qp_rhs_thm3(int n, int level, const DividedBernoulliSet& set, Lead lead = Lead::published);

// Same congruences as restated for the Q̃ substitution; transcribed separately.
Residue qtilde_lemma(int n, int level, const DividedBernoulliSet& set);

// Direct Q̃_n mod p^level from the Fermat-quotient oracle.
Residue qtilde_direct(int n, u64 p, int level);

struct CoefficientTables {
  using Row5 = std::array<Rational, 5>;
  using Row6 = std::array<Rational, 6>;
  // Level 5: p^2 (a, a1, a2), p^3 (b, b1), p^4 (c, d).
  struct Level5 {
    Row5 alpha, alpha1, alpha2, beta, beta1, gamma, delta;
  } level5;
  // Level 6: p^2 (a..a3), p^3 (b..b2), p^4 (c, c1, e, e1), p^5 (d, h).
  struct Level6 {
    Row6 alpha, alpha1, alpha2, alpha3, beta, beta1, beta2, gamma, gamma1, delta, epsilon, epsilon1, eta;
  } level6;

  static const CoefficientTables& published();
};

// Right side in terms of divided Bernoulli numbers at raw indices, with the
// leading term (p-1) Δ^(n-1) evaluated by forward differences.
Residue qp_rhs_props(int n, int level, const DividedBernoulliSet& set,
                     const CoefficientTables& tables = CoefficientTables::published());

// ---- ψ and P̃ ---------------------------------------------------------------

const MultiPoly& psi_poly(int nu);
const MultiPoly& ptilde_poly(int nu);

// ψ_nu at values[0..nu-1]; result at the coarsest input precision.
Residue psi_eval(int nu, const std::vector<Residue>& values);
// P̃_nu with the indeterminate set to the prime of the values.
Residue ptilde_eval(int nu, const std::vector<Residue>& values);

// Checks P̃_n = p^(n-1)/n! · ψ_n under x_k -> k x_k / p^(k-1) for n = 1..6.
// On mismatch returns false and writes the offending difference to diff.
bool psi_ptilde_consistency(std::string* diff = nullptr);

// sum_{v=1}^{r} P̃_v(Q̃_1..Q̃_v) mod p^r; requires 1 <= r <= 6 and p > r.
Residue wilson_via_psi(u64 p, int r);
// The same sum written with ψ_v and Q_p(1..v) directly.
Residue wilson_via_psi_direct(u64 p, int r);

// ---- zero expressions and reductions --------------------------------------

struct Congruence {
  std::string name;
  std::string lhs;
  std::string rhs;  // "0" for a vanishing expression
  int precision;
  u64 min_prime;
};

const std::vector<Congruence>& zero_expressions();
std::vector<CheckResult> zero_expression_suite(const DividedBernoulliSet& set);

// Short forms of ω_1..ω_6 mod p (index 0 holds ω_1).
const std::vector<std::string>& omega_mod_p_forms();
const std::vector<Congruence>& omega5_reduction_table();
// ω_v mod p against the short forms, the ω_5 reduction rows, the mod p^7 to
// mod p^6 chain, and W_p ≡ -B1 mod p.
std::vector<CheckResult> table3_suite(const DividedBernoulliSet& set);

}  // namespace supercong
