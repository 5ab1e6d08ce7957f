#include "supercong/wide_int.hpp"

#include <algorithm>
#include <stdexcept>

namespace supercong {

Montgomery128::Montgomery128(u128 n) : n_(n) {
  if ((n & 1) == 0 || (n >> 127) != 0) {
    throw std::invalid_argument("Montgomery128: modulus must be odd and below 2^127");
  }
  // Newton iteration for n^{-1} mod 2^128; x = n is correct to 3 bits.
  u128 inv = n;
  for (int i = 0; i < 7; ++i) inv *= 2 - n * inv;
  neg_inv_ = -inv;

  r1_ = (-n) % n;
  u128 x = r1_;
  for (int i = 0; i < 128; ++i) {
    x <<= 1;
    if (x >= n) x -= n;
  }
  r2_ = x;
}

u128 Montgomery128::powmod(u128 base, u64 exp) const {
  if (n_ == 1) return 0;
  u128 b = to_form(base % n_);
  u128 acc = r1_;
  while (exp != 0) {
    if (exp & 1) acc = mul(acc, b);
    b = mul(b, b);
    exp >>= 1;
  }
  return from_form(acc);
}

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

u128 parse_u128(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("parse_u128: empty string");
  constexpr u128 kMax = ~u128{0};
  u128 v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("parse_u128: not a decimal digit in '" + std::string(text) + "'");
    }
    const auto d = static_cast<u128>(c - '0');
    if (v > (kMax - d) / 10) throw std::invalid_argument("parse_u128: overflow");
    v = v * 10 + d;
  }
  return v;
}

}  // namespace supercong
