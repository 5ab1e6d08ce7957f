#pragma once

// Unsigned 128-bit helpers: widening multiply, Montgomery reduction for odd
// moduli below 2^127, and decimal conversion.

#include <cstdint>
#include <string>
#include <string_view>

namespace supercong {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct U256 {
  u128 hi = 0;
  u128 lo = 0;
};

inline constexpr u128 kLow64 = ~u64{0};

// Full 256-bit product of two 128-bit values.
constexpr U256 mul_wide(u128 a, u128 b) {
  const u64 a0 = static_cast<u64>(a), a1 = static_cast<u64>(a >> 64);
  const u64 b0 = static_cast<u64>(b), b1 = static_cast<u64>(b >> 64);
  const u128 p00 = static_cast<u128>(a0) * b0;
  const u128 p01 = static_cast<u128>(a0) * b1;
  const u128 p10 = static_cast<u128>(a1) * b0;
  const u128 p11 = static_cast<u128>(a1) * b1;
  const u128 mid = (p00 >> 64) + (p01 & kLow64) + (p10 & kLow64);
  U256 out;
  out.lo = (p00 & kLow64) | (mid << 64);
  out.hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
  return out;
}

/// Montgomery arithmetic modulo an odd n < 2^127 with R = 2^128.
///
/// Values passed to mul() must already be in Montgomery form (x·R mod n);
/// to_form/from_form convert. mulmod() works on plain representatives.
class Montgomery128 {
 public:
  Montgomery128() = default;
  explicit Montgomery128(u128 n);

  u128 modulus() const { return n_; }

  u128 reduce(const U256& t) const {
    const u128 m = t.lo * neg_inv_;
    const U256 mn = mul_wide(m, n_);
    const u128 carry = t.lo != 0 ? 1 : 0;
    u128 r = t.hi + mn.hi + carry;
    if (r >= n_) r -= n_;
    return r;
  }

  u128 mul(u128 a, u128 b) const { return reduce(mul_wide(a, b)); }
  u128 to_form(u128 a) const { return mul(a, r2_); }
  u128 from_form(u128 a) const { return reduce(U256{0, a}); }
  u128 one() const { return r1_; }

  u128 mulmod(u128 a, u128 b) const {
    if (n_ <= kLow64) return (a * b) % n_;
    return mul(mul(a, b), r2_);
  }

  // Plain-representative power.
  u128 powmod(u128 base, u64 exp) const;

 private:
  u128 n_ = 1;
  u128 neg_inv_ = 0;  // -n^{-1} mod 2^128
  u128 r1_ = 0;       // R mod n
  u128 r2_ = 0;       // R^2 mod n
};

std::string to_string(u128 v);

// Parses a non-negative decimal string; throws std::invalid_argument on
// malformed input or overflow.
u128 parse_u128(std::string_view text);

}  // namespace supercong
