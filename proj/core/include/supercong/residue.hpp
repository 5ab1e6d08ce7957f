#pragma once

// Fixed-precision p-adic integers: classes in Z/p^r Z with the precision r
// carried alongside the value.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "supercong/wide_int.hpp"

namespace supercong {

using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPrimeError : public Error {
 public:
  using Error::Error;
};
class OverflowError : public Error {
 public:
  using Error::Error;
};
class PrimeMismatchError : public Error {
 public:
  using Error::Error;
};
class NotUnitError : public Error {
 public:
  using Error::Error;
};
// Raised when an exact division by a power of p is requested on a class of
// too small valuation, or when a precision budget is exhausted.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

bool is_prime(u64 n);

// Largest supported modulus is below 2^127 (Montgomery headroom).
inline constexpr int kMaxModulusBits = 127;

class Modulus {
 public:
  Modulus() = default;

  u64 prime() const { return p_; }
  int precision() const { return r_; }
  u128 value() const { return value_; }
  const Montgomery128& montgomery() const { return mont_; }

  friend bool operator==(const Modulus& a, const Modulus& b) {
    return a.p_ == b.p_ && a.r_ == b.r_;
  }

 private:
  friend Modulus make_modulus(u64 p, int r);
  u64 p_ = 0;
  int r_ = 0;
  u128 value_ = 1;
  Montgomery128 mont_;
};

// Throws NotPrimeError unless p is an odd prime, PrecisionError if r < 1,
// OverflowError if p^r does not fit.
Modulus make_modulus(u64 p, int r);

// Largest r with p^r representable.
int max_precision(u64 p);

struct Valuation {
  int order = 0;
  bool is_zero = false;  // order is then only a lower bound (= precision)
};

class Residue {
 public:
  Residue() = default;
  Residue(u128 value, const Modulus& m) : value_(value % m.value()), mod_(m) {}

  static Residue from_int(std::int64_t v, const Modulus& m);
  static Residue zero(const Modulus& m) { return Residue(0, m); }
  static Residue one(const Modulus& m) { return Residue(1, m); }

  u128 value() const { return value_; }
  const Modulus& modulus() const { return mod_; }
  u64 prime() const { return mod_.prime(); }
  int precision() const { return mod_.precision(); }
  bool is_zero() const { return value_ == 0; }

  // Drop to a lower precision; r must not exceed the current one.
  Residue reduce(int r) const;

  Residue operator-() const;
  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  Residue& operator+=(const Residue& b) { return *this = *this + b; }
  Residue& operator-=(const Residue& b) { return *this = *this - b; }
  Residue& operator*=(const Residue& b) { return *this = *this * b; }

  Residue pow(u64 exponent) const;

  // Same class, same precision; mismatched primes compare unequal.
  friend bool operator==(const Residue& a, const Residue& b) {
    return a.mod_ == b.mod_ && a.value_ == b.value_;
  }

  std::string to_string() const { return supercong::to_string(value_); }
  // Base-p digits of the representative, least significant first, exactly
  // precision() of them.
  std::vector<u64> digits() const;

 private:
  u128 value_ = 0;
  Modulus mod_;
};

Residue add(const Residue& a, const Residue& b);
Residue sub(const Residue& a, const Residue& b);
Residue mul(const Residue& a, const Residue& b);
Residue pow(const Residue& a, u64 exponent);

// Inverse of a unit; throws NotUnitError when p divides the value.
Residue inv_unit(const Residue& a);

Valuation valuation(const Residue& a);

// Exact division by p^k: the class must have valuation >= k and k < r.
// The result lives at precision r - k.
Residue shift_down(const Residue& a, int k);

// a·p^k kept at the same precision.
Residue mul_by_p_power(const Residue& a, int k);

// a·p^k at precision r + k; well defined because a is known mod p^r.
Residue shift_up(const Residue& a, int k);

// Embeds a p-integral rational; throws NotUnitError if p divides the
// denominator.
Residue rational_to_residue(const Rational& q, const Modulus& m);
Residue rational_to_residue(std::int64_t num, std::int64_t den, const Modulus& m);

// Signed representative in (-p^r/2, p^r/2], handy for diagnostics.
std::string signed_string(const Residue& a);

u128 pow_u128(u64 base, int exponent);

// v^e mod p^r for v = 0..p-1 as plain representatives. Uses complete
// multiplicativity, so only prime bases pay for a full exponentiation.
std::vector<u128> power_table(u64 exponent, const Modulus& m);

}  // namespace supercong
