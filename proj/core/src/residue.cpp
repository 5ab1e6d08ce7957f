#include "supercong/residue.hpp"

#include <unordered_map>

namespace supercong {

namespace {

void require_same_prime(const Residue& a, const Residue& b) {
  if (a.prime() != b.prime()) {
    throw PrimeMismatchError("residue operands have different primes: " + std::to_string(a.prime()) +
                             " vs " + std::to_string(b.prime()));
  }
}

// Common modulus for a binary operation: the coarser of the two.
const Modulus& common_modulus(const Residue& a, const Residue& b) {
  require_same_prime(a, b);
  return a.precision() <= b.precision() ? a.modulus() : b.modulus();
}

u128 to_u128(const mpz_class& z) {
  // z is non-negative and below 2^128 here.
  mpz_class hi = z >> 64;
  mpz_class lo = z - (hi << 64);
  const u128 h = static_cast<u128>(mpz_get_ui(hi.get_mpz_t()));
  const u128 l = static_cast<u128>(mpz_get_ui(lo.get_mpz_t()));
  return (h << 64) | l;
}

mpz_class to_mpz(u128 v) {
  mpz_class hi = static_cast<unsigned long>(static_cast<u64>(v >> 64));
  mpz_class lo = static_cast<unsigned long>(static_cast<u64>(v));
  return (hi << 64) + lo;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (u64 d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

int max_precision(u64 p) {
  if (p < 2) return 0;
  const u128 limit = u128{1} << kMaxModulusBits;
  u128 v = 1;
  int r = 0;
  while (v <= (limit - 1) / p) {
    v *= p;
    ++r;
  }
  return r;
}

u128 pow_u128(u64 base, int exponent) {
  u128 v = 1;
  for (int i = 0; i < exponent; ++i) v *= base;
  return v;
}

Modulus make_modulus(u64 p, int r) {
  // Moduli are rebuilt constantly by reduce/shift_down; cache per thread.
  thread_local std::unordered_map<u64, Modulus> cache;
  if (p < (u64{1} << 40) && r >= 0 && r < 256) {
    const u64 key = (p << 8) | static_cast<u64>(r);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    if (r < 1) throw PrecisionError("precision exponent must be >= 1, got " + std::to_string(r));
    if (p == 2 || !is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not an odd prime");
    if (r > max_precision(p)) {
      throw OverflowError(std::to_string(p) + "^" + std::to_string(r) + " exceeds the 2^" +
                          std::to_string(kMaxModulusBits) + " modulus limit");
    }
    Modulus m;
    m.p_ = p;
    m.r_ = r;
    m.value_ = pow_u128(p, r);
    m.mont_ = Montgomery128(m.value_);
    cache.emplace(key, m);
    return m;
  }
  if (r < 1) throw PrecisionError("precision exponent must be >= 1, got " + std::to_string(r));
  if (p == 2 || !is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not an odd prime");
  throw OverflowError(std::to_string(p) + "^" + std::to_string(r) + " is out of range");
}

Residue Residue::from_int(std::int64_t v, const Modulus& m) {
  const u128 n = m.value();
  if (v >= 0) return Residue(static_cast<u128>(v) % n, m);
  const u128 mag = static_cast<u128>(-(v + 1)) + 1;
  const u128 r = mag % n;
  return Residue(r == 0 ? 0 : n - r, m);
}

Residue Residue::reduce(int r) const {
  if (r == precision()) return *this;
  if (r > precision()) {
    throw PrecisionError("cannot raise precision from " + std::to_string(precision()) + " to " +
                         std::to_string(r));
  }
  return Residue(value_, make_modulus(prime(), r));
}

Residue Residue::operator-() const {
  Residue out = *this;
  if (value_ != 0) out.value_ = mod_.value() - value_;
  return out;
}

Residue operator+(const Residue& a, const Residue& b) {
  const Modulus& m = common_modulus(a, b);
  const u128 n = m.value();
  const u128 x = a.value_ % n, y = b.value_ % n;
  Residue out;
  out.mod_ = m;
  out.value_ = x >= n - y ? x - (n - y) : x + y;
  return out;
}

Residue operator-(const Residue& a, const Residue& b) {
  const Modulus& m = common_modulus(a, b);
  const u128 n = m.value();
  const u128 x = a.value_ % n, y = b.value_ % n;
  Residue out;
  out.mod_ = m;
  out.value_ = x >= y ? x - y : n - (y - x);
  return out;
}

Residue operator*(const Residue& a, const Residue& b) {
  const Modulus& m = common_modulus(a, b);
  const u128 n = m.value();
  Residue out;
  out.mod_ = m;
  out.value_ = m.montgomery().mulmod(a.value_ % n, b.value_ % n);
  return out;
}

Residue Residue::pow(u64 exponent) const {
  Residue out;
  out.mod_ = mod_;
  out.value_ = mod_.montgomery().powmod(value_, exponent);
  return out;
}

std::vector<u64> Residue::digits() const {
  std::vector<u64> out;
  out.reserve(static_cast<std::size_t>(precision()));
  u128 v = value_;
  for (int i = 0; i < precision(); ++i) {
    out.push_back(static_cast<u64>(v % prime()));
    v /= prime();
  }
  return out;
}

Residue add(const Residue& a, const Residue& b) { return a + b; }
Residue sub(const Residue& a, const Residue& b) { return a - b; }
Residue mul(const Residue& a, const Residue& b) { return a * b; }
Residue pow(const Residue& a, u64 exponent) { return a.pow(exponent); }

Residue inv_unit(const Residue& a) {
  const u64 p = a.prime();
  const auto a0 = static_cast<std::int64_t>(a.value() % p);
  if (a0 == 0) {
    throw NotUnitError(a.to_string() + " is not a unit modulo " + std::to_string(p) + "^" +
                       std::to_string(a.precision()));
  }
  // Inverse mod p by extended Euclid, then Newton-Hensel lifting.
  std::int64_t r0 = static_cast<std::int64_t>(p), r1 = a0, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  Residue x = Residue::from_int(s0, a.modulus());
  const Residue two = Residue::from_int(2, a.modulus());
  for (int known = 1; known < a.precision(); known *= 2) x = x * (two - a * x);
  return x;
}

Valuation valuation(const Residue& a) {
  if (a.is_zero()) return {a.precision(), true};
  int k = 0;
  u128 v = a.value();
  while (v % a.prime() == 0) {
    v /= a.prime();
    ++k;
  }
  return {k, false};
}

Residue shift_down(const Residue& a, int k) {
  if (k < 0) throw PrecisionError("shift_down: negative shift");
  if (k == 0) return a;
  if (k >= a.precision()) {
    throw PrecisionError("shift_down by " + std::to_string(k) + " needs precision > " +
                         std::to_string(k) + ", have " + std::to_string(a.precision()));
  }
  const u128 pk = pow_u128(a.prime(), k);
  if (a.value() % pk != 0) {
    throw PrecisionError("shift_down: valuation of " + a.to_string() + " is below " +
                         std::to_string(k));
  }
  return Residue(a.value() / pk, make_modulus(a.prime(), a.precision() - k));
}

Residue mul_by_p_power(const Residue& a, int k) {
  if (k < 0) throw PrecisionError("mul_by_p_power: negative exponent");
  if (k >= a.precision()) return Residue::zero(a.modulus());
  return a * Residue(pow_u128(a.prime(), k), a.modulus());
}

Residue shift_up(const Residue& a, int k) {
  if (k < 0) throw PrecisionError("shift_up: negative exponent");
  const Modulus m = make_modulus(a.prime(), a.precision() + k);
  return Residue(a.value() * pow_u128(a.prime(), k), m);
}

Residue rational_to_residue(const Rational& q, const Modulus& m) {
  const mpz_class n = to_mpz(m.value());
  mpz_class den = q.get_den() % n;
  if (mpz_class(den % m.prime()) == 0) {
    throw NotUnitError("denominator of " + q.get_str() + " is divisible by " +
                       std::to_string(m.prime()));
  }
  mpz_class num = q.get_num() % n;
  if (num < 0) num += n;
  const Residue d = inv_unit(Residue(to_u128(den), m));
  return Residue(to_u128(num), m) * d;
}

Residue rational_to_residue(std::int64_t num, std::int64_t den, const Modulus& m) {
  if (den == 0) throw NotUnitError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (static_cast<u64>(den) % m.prime() == 0) {
    throw NotUnitError("denominator " + std::to_string(den) + " is divisible by " +
                       std::to_string(m.prime()));
  }
  const Residue n = Residue::from_int(num, m);
  if (den == 1) return n;
  return n * inv_unit(Residue::from_int(den, m));
}

std::vector<u128> power_table(u64 exponent, const Modulus& m) {
  const u64 p = m.prime();
  const Montgomery128& mont = m.montgomery();
  std::vector<u128> table(p, 0);
  std::vector<std::uint32_t> spf(p, 0);
  for (u64 v = 1; v < p; ++v) {
    if (v == 1) {
      table[v] = mont.one();
    } else if (spf[v] == 0) {
      for (u64 w = v * v; w < p; w += v) {
        if (spf[w] == 0) spf[w] = static_cast<std::uint32_t>(v);
      }
      u128 base = mont.to_form(v % m.value());
      u128 acc = mont.one();
      for (u64 e = exponent; e != 0; e >>= 1) {
        if (e & 1) acc = mont.mul(acc, base);
        base = mont.mul(base, base);
      }
      table[v] = acc;
    } else {
      table[v] = mont.mul(table[spf[v]], table[v / spf[v]]);
    }
  }
  for (auto& x : table) x = mont.from_form(x);
  if (exponent == 0) table[0] = 1 % m.value();
  return table;
}

std::string signed_string(const Residue& a) {
  const u128 n = a.modulus().value();
  if (a.value() > n / 2) return "-" + to_string(n - a.value());
  return a.to_string();
}

}  // namespace supercong
