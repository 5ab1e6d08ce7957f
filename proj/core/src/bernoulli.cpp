#include "supercong/bernoulli.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

namespace supercong {

namespace {

int p_valuation(u64 n, u64 p) {
  int v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

u64 strip_p(u64 n, u64 p) {
  while (n != 0 && n % p == 0) n /= p;
  return n;
}

}  // namespace

Rational exact_bernoulli(int n, int bound) {
  if (n < 0) throw std::out_of_range("exact_bernoulli: negative index");
  if (n > bound) {
    throw std::out_of_range("exact_bernoulli: index " + std::to_string(n) + " exceeds oracle bound " +
                            std::to_string(bound));
  }
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1), Rational(-1, 2)};
  std::lock_guard lock(mutex);
  while (static_cast<int>(table.size()) <= n) {
    const auto m = static_cast<unsigned long>(table.size());
    if (m % 2 == 1) {
      table.emplace_back(0);
      continue;
    }
    // sum_{k=0}^{m} binom(m+1, k) B_k = 0
    Rational acc = 0;
    mpz_class binom;
    for (unsigned long k = 0; k < m; ++k) {
      if (k > 1 && k % 2 == 1) continue;
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, k);
      acc += Rational(binom) * table[k];
    }
    Rational b = -acc / Rational(static_cast<long>(m + 1));
    b.canonicalize();
    table.push_back(b);
  }
  return table[static_cast<std::size_t>(n)];
}

Residue power_sum_mod(u64 n, const Modulus& m) {
  const std::vector<u128> table = power_table(n, m);
  const u128 modv = m.value();
  u128 sum = 0;
  for (std::size_t v = 1; v < table.size(); ++v) {
    const u128 x = table[v];
    sum = sum >= modv - x ? sum - (modv - x) : sum + x;
  }
  return Residue(sum, m);
}

BernoulliEngine::BernoulliEngine(u64 p, int guard) : p_(p), guard_(guard) {
  if (p == 2 || !is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not an odd prime");
  if (guard < 1) throw PrecisionError("guard precision must be >= 1");
}

Residue BernoulliEngine::binomial(u64 n, int k, int r) const {
  const Modulus mod = make_modulus(p_, r);
  Residue num = Residue::one(mod), den = Residue::one(mod);
  int excess = 0;
  for (int i = 0; i < k; ++i) {
    const u64 f = n - static_cast<u64>(i);
    excess += p_valuation(f, p_);
    num *= Residue(strip_p(f, p_), mod);
    const u64 g = static_cast<u64>(i) + 1;
    excess -= p_valuation(g, p_);
    den *= Residue(strip_p(g, p_), mod);
  }
  return mul_by_p_power(num * inv_unit(den), excess);
}

Residue BernoulliEngine::times_p(int m, int g) {
  if (m < 0) throw std::out_of_range("times_p: negative index");
  const Modulus mod = make_modulus(p_, g);
  if (m == 0) return Residue(p_, mod);
  if (m == 1) return -(Residue(p_, mod) * inv_unit(Residue::from_int(2, mod)));
  if (m % 2 == 1) return Residue::zero(mod);

  if (auto it = memo_.find(m); it != memo_.end() && it->second.precision() >= g) {
    return it->second.reduce(g);
  }

  Residue acc = power_sum_mod(static_cast<u64>(m), mod);
  // Corrections with k - 1 - v_p(k) >= g vanish; beyond 2g + 8 none survive.
  const int kmax = std::min(m + 1, 2 * g + 8);
  for (int k = 2; k <= kmax; ++k) {
    const int lower = m + 1 - k;
    if (lower > 1 && lower % 2 == 1) continue;
    const int vk = p_valuation(static_cast<u64>(k), p_);
    const int shift = k - 1 - vk;
    if (shift >= g) continue;
    const int r = g - shift;
    const Modulus sub = make_modulus(p_, r);
    const Residue unit_k = Residue(strip_p(static_cast<u64>(k), p_), sub);
    const Residue term = binomial(static_cast<u64>(m), k - 1, r) * inv_unit(unit_k) * times_p(lower, r);
    acc -= shift_up(term, shift);
  }
  memo_.insert_or_assign(m, acc);
  return acc;
}

Residue BernoulliEngine::bnp(int m, int r) {
  const Modulus mod = make_modulus(p_, r);
  if (m == 0) return Residue::zero(mod);
  if (m > 1 && m % 2 == 1) return Residue::zero(mod);
  Residue x = times_p(m, r + 1);
  const bool pole = m > 0 && m % static_cast<int>(p_ - 1) == 0;
  if (pole) x = x + Residue::one(x.modulus()) - Residue(p_, x.modulus());
  if (valuation(x).order < 1) {
    throw PrecisionError("p·B_" + std::to_string(m) + " has the wrong residue mod " + std::to_string(p_) +
                         " (von Staudt-Clausen violated)");
  }
  return shift_down(x, 1);
}

Residue BernoulliEngine::bnpd(long m, int r) {
  const Modulus mod = make_modulus(p_, r);
  if (m <= 0) return Residue::zero(mod);
  const int e = p_valuation(static_cast<u64>(m), p_);
  const u64 unit = strip_p(static_cast<u64>(m), p_);
  const int work = r + std::max(guard_, e + 1);
  Residue b = bnp(static_cast<int>(m), work - 1);
  if (e > 0) {
    const Valuation v = valuation(b);
    if (!v.is_zero && v.order < e) {
      throw PrecisionError("B̂_" + std::to_string(m) + " has valuation " + std::to_string(v.order) +
                           " < " + std::to_string(e) + "; cannot divide by " + std::to_string(m));
    }
    b = shift_down(b, e);
  }
  return (b * inv_unit(Residue(unit, b.modulus()))).reduce(r);
}

BernoulliTimesP bernoulli_times_p(int m, u64 p, int g) {
  BernoulliEngine engine(p, kDefaultGuard);
  return {m, engine.times_p(m, g)};
}

Residue bnp(int m, const Modulus& modulus) {
  BernoulliEngine engine(modulus.prime(), kDefaultGuard);
  return engine.bnp(m, modulus.precision());
}

Residue bnpd(long m, const Modulus& modulus, int guard) {
  BernoulliEngine engine(modulus.prime(), guard);
  return engine.bnpd(m, modulus.precision());
}

PrecisionRequest PrecisionRequest::mod_p6_factorial() {
  PrecisionRequest req;
  for (int n = 1; n <= 5; ++n) req.bn.push_back({n, 5});
  for (int n = 1; n <= 3; ++n) req.bnd.push_back({{n, 2}, 3});
  req.bnd.push_back({{1, 4}, 1});
  return req;
}

PrecisionRequest PrecisionRequest::mod_p7_factorial() {
  PrecisionRequest req;
  for (int n = 1; n <= 6; ++n) req.bn.push_back({n, 6});
  for (int n = 1; n <= 4; ++n) req.bnd.push_back({{n, 2}, 4});
  for (int n = 1; n <= 2; ++n) req.bnd.push_back({{n, 4}, 2});
  return req;
}

const Residue& DividedBernoulliSet::bar(int n) const {
  auto it = bn_.find(n);
  if (it == bn_.end()) throw MissingEntryError("B̄_" + std::to_string(n) + " not in the cache");
  return it->second;
}

const Residue& DividedBernoulliSet::bar(int n, int d) const {
  auto it = bnd_.find({n, d});
  if (it == bnd_.end()) {
    throw MissingEntryError("B̄_{" + std::to_string(n) + "," + std::to_string(d) + "} not in the cache");
  }
  return it->second;
}

std::optional<Residue> DividedBernoulliSet::at_index(long index, int r) const {
  if (index <= 0) return Residue::zero(make_modulus(p_, r));
  const long step = static_cast<long>(p_) - 1;
  const Residue* hit = nullptr;
  if (index % step == 0) {
    if (auto it = bn_.find(static_cast<int>(index / step)); it != bn_.end()) hit = &it->second;
  }
  for (int d : {2, 4}) {
    if (hit == nullptr && (index + d) % step == 0) {
      if (auto it = bnd_.find({static_cast<int>((index + d) / step), d}); it != bnd_.end()) {
        hit = &it->second;
      }
    }
  }
  if (hit == nullptr || hit->precision() < r) return std::nullopt;
  return hit->reduce(r);
}

DividedBernoulliSet divided_set(BernoulliEngine& engine, const PrecisionRequest& request) {
  const u64 p = engine.prime();
  if (p < 7) throw NotPrimeError("divided Bernoulli sets need p >= 7, got " + std::to_string(p));
  const long step = static_cast<long>(p) - 1;
  DividedBernoulliSet out(p);
  for (const auto& [n, r] : request.bn) out.insert(n, engine.bnpd(n * step, r));
  for (const auto& [key, r] : request.bnd) {
    const auto [n, d] = key;
    out.insert(n, d, engine.bnpd(n * step - d, r));
  }
  return out;
}

DividedBernoulliSet divided_set(u64 p, const PrecisionRequest& request, int guard) {
  BernoulliEngine engine(p, guard);
  return divided_set(engine, request);
}

}  // namespace supercong
