#include "supercong/difference.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "supercong/oracles.hpp"

namespace supercong {

Residue forward_difference(const IndexedSequence& f, long h, int n, long s) {
  if (n < 0) throw std::invalid_argument("forward_difference: n must be >= 0");
  if (h < 1) throw std::invalid_argument("forward_difference: h must be >= 1");
  if (n > 60) throw std::out_of_range("forward_difference: order above 60 overflows the binomials");
  std::int64_t binom = 1;  // binom(n, v)
  Residue acc;
  for (int v = 0; v <= n; ++v) {
    const Residue sample = f(s + static_cast<long>(v) * h);
    const std::int64_t coef = ((n - v) % 2 == 0) ? binom : -binom;
    const Residue term = Residue::from_int(coef, sample.modulus()) * sample;
    acc = v == 0 ? term : acc + term;
    binom = binom * (n - v) / (v + 1);
  }
  return acc;
}

Residue binom_diff_mod_p(int k, int n, u64 p) {
  if (k < 1 || n < 1) throw std::invalid_argument("binom_diff_mod_p: k and n must be >= 1");
  if (static_cast<u64>(k) >= p) {
    throw std::invalid_argument("binom_diff_mod_p: need p > k, got p = " + std::to_string(p) +
                                ", k = " + std::to_string(k));
  }
  const Modulus mod = make_modulus(p, 1);
  const IndexedSequence binom_k = [&](long v) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(v), static_cast<unsigned long>(k));
    return rational_to_residue(Rational(b), mod);
  };
  return forward_difference(binom_k, static_cast<long>(p) - 1, n, 0);
}

Residue qp_operator_form(int n, u64 p, int r) {
  if (n < 1) throw std::invalid_argument("qp_operator_form: n must be >= 1");
  const int work = r + n - 1;
  const IndexedSequence sh = [&](long v) { return sh_mod(static_cast<u64>(v), p, work); };
  const Residue d = forward_difference(sh, static_cast<long>(p) - 1, n, 0);
  return n == 1 ? d : shift_down(d, n - 1);
}

}  // namespace supercong
