#pragma once

// Bernoulli numbers modulo prime powers.
//
// Everything internal is carried as p·B_m, which is p-integral for every m
// (von Staudt-Clausen), so no intermediate ever has negative valuation. The
// values come from the power-sum identity
//
//   p·B_m = S_m(p) - sum_{k>=2} binom(m, k-1) · (p^(k-1)/k) · p·B_(m+1-k)
//
// where the k-th correction only matters to precision g - (k-1-v_p(k)). The
// recursion therefore touches about g lower indices per target, each at a
// smaller precision, instead of every index below m.

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "supercong/residue.hpp"

namespace supercong {

class MissingEntryError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kDefaultOracleBound = 3000;
inline constexpr int kDefaultGuard = 2;

// Exact B_n with B_1 = -1/2, memoized process-wide. Throws std::out_of_range
// above `bound`.
Rational exact_bernoulli(int n, int bound = kDefaultOracleBound);

// S_n(p) = sum_{v=1}^{p-1} v^n mod p^r by direct summation.
Residue power_sum_mod(u64 n, const Modulus& m);

struct BernoulliTimesP {
  int m = 0;
  Residue value;  // p·B_m mod p^g
};

/// Per-prime Bernoulli evaluator with a precision-aware memo.
///
/// Not thread-safe; use one engine per worker. The memo keeps, per index,
/// the most precise value computed so far and answers lower-precision
/// requests by reduction.
class BernoulliEngine {
 public:
  explicit BernoulliEngine(u64 p, int guard = kDefaultGuard);

  u64 prime() const { return p_; }
  int guard() const { return guard_; }

  // p·B_m mod p^g.
  Residue times_p(int m, int g);

  // p-integral Bernoulli number: 0 for m = 0, B_m + 1/p - 1 when p-1 | m,
  // B_m otherwise.
  Residue bnp(int m, int r);

  // Divided number bnp(m)/m for m >= 1, and 0 for m <= 0.
  Residue bnpd(long m, int r);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  Residue binomial(u64 n, int k, int r) const;

  u64 p_;
  int guard_;
  std::unordered_map<int, Residue> memo_;
};

BernoulliTimesP bernoulli_times_p(int m, u64 p, int g);
Residue bnp(int m, const Modulus& modulus);
Residue bnpd(long m, const Modulus& modulus, int guard = kDefaultGuard);

/// Precisions requested for B̄_n = bnpd(n(p-1)) and B̄_{n,d} = bnpd(n(p-1)-d).
struct PrecisionRequest {
  std::vector<std::pair<int, int>> bn;  // (n, r)
  std::vector<std::pair<std::pair<int, int>, int>> bnd;  // ((n, d), r)

  // B̄_1..B̄_5 mod p^5, B̄_{n,2} (n <= 3) mod p^3, B̄_{1,4} mod p.
  static PrecisionRequest mod_p6_factorial();
  // B̄_1..B̄_6 mod p^6, B̄_{n,2} (n <= 4) mod p^4, B̄_{n,4} (n <= 2) mod p^2.
  static PrecisionRequest mod_p7_factorial();
};

class DividedBernoulliSet {
 public:
  explicit DividedBernoulliSet(u64 p) : p_(p) {}

  u64 prime() const { return p_; }

  // B̄_n; throws MissingEntryError if it was not requested.
  const Residue& bar(int n) const;
  // B̄_{n,d}, d in {2, 4}.
  const Residue& bar(int n, int d) const;
  bool contains(int n) const { return bn_.count(n) != 0; }
  bool contains(int n, int d) const { return bnd_.count({n, d}) != 0; }

  // Value at a raw divided-Bernoulli index reduced to precision r: zero for
  // index <= 0, otherwise the stored entry mapping to it, if it is precise
  // enough.
  std::optional<Residue> at_index(long index, int r) const;

  void insert(int n, Residue value) { bn_.insert_or_assign(n, std::move(value)); }
  void insert(int n, int d, Residue value) { bnd_.insert_or_assign({n, d}, std::move(value)); }

  const std::map<int, Residue>& bn() const { return bn_; }
  const std::map<std::pair<int, int>, Residue>& bnd() const { return bnd_; }

 private:
  u64 p_;
  std::map<int, Residue> bn_;
  std::map<std::pair<int, int>, Residue> bnd_;
};

// Requires p >= 7.
DividedBernoulliSet divided_set(BernoulliEngine& engine,
                                const PrecisionRequest& request = PrecisionRequest::mod_p7_factorial());
DividedBernoulliSet divided_set(u64 p,
                                const PrecisionRequest& request = PrecisionRequest::mod_p7_factorial(),
                                int guard = kDefaultGuard);

}  // namespace supercong
