#include <doctest.h>

#include <gmpxx.h>

#include "supercong/residue.hpp"

using namespace supercong;

namespace {

mpz_class z(u128 v) {
  mpz_class hi = static_cast<unsigned long>(static_cast<u64>(v >> 64));
  return (hi << 64) + static_cast<unsigned long>(static_cast<u64>(v));
}

}  // namespace

TEST_CASE("wide multiply and Montgomery agree with GMP") {
  const u128 n = pow_u128(1999, 11);  // about 2^120
  const Montgomery128 mont(n);
  u128 a = n - 12345, b = n / 3 + 7;
  for (int i = 0; i < 50; ++i) {
    const U256 w = mul_wide(a, b);
    CHECK((z(w.hi) << 128) + z(w.lo) == z(a) * z(b));
    CHECK(z(mont.mulmod(a, b)) == (z(a) * z(b)) % z(n));
    a = (mont.mulmod(a, a) + 3) % n;
    b = (b * 6364136223846793005ULL + 1442695040888963407ULL) % n;
  }
  mpz_class expect;
  mpz_powm_ui(expect.get_mpz_t(), z(a).get_mpz_t(), 1000003, z(n).get_mpz_t());
  CHECK(z(mont.powmod(a, 1000003)) == expect);
}

TEST_CASE("decimal conversion round-trips") {
  const u128 big = pow_u128(2003, 11);
  CHECK(parse_u128(to_string(big)) == big);
  CHECK(to_string(0) == "0");
  CHECK_THROWS_AS(parse_u128("12a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_u128("340282366920938463463374607431768211456"), std::invalid_argument);
}

TEST_CASE("make_modulus") {
  CHECK(make_modulus(5, 2).value() == 25);
  CHECK(make_modulus(7, 6).value() == 117649);
  CHECK_THROWS_AS(make_modulus(4, 2), NotPrimeError);
  CHECK_THROWS_AS(make_modulus(2, 3), NotPrimeError);
  CHECK_THROWS_AS(make_modulus(7, 0), PrecisionError);
  CHECK_THROWS_AS(make_modulus(32749, 9), OverflowError);
  CHECK(make_modulus(32749, 8).precision() == 8);  // p^8 with p < 2^15 fits
  CHECK(max_precision(3) == 80);
}

TEST_CASE("ring operations") {
  const Modulus m25 = make_modulus(5, 2), m49 = make_modulus(7, 2), m343 = make_modulus(7, 3);
  CHECK((Residue(24, m25) + Residue(1, m25)).value() == 0);
  CHECK((Residue(6, m49) * Residue(6, m49)).value() == 36);
  CHECK(Residue(2, m343).pow(6).value() == 64);
  CHECK((Residue(3, m25) - Residue(4, m25)).value() == 24);
  CHECK(Residue::from_int(-1, m343).value() == 342);
  // Mixed precision drops to the coarser modulus.
  const Residue mixed = Residue(100, m343) + Residue(3, m49);
  CHECK(mixed.precision() == 2);
  CHECK(mixed.value() == 103 % 49);
  CHECK_THROWS_AS(Residue(1, m25) + Residue(1, m49), PrimeMismatchError);
}

TEST_CASE("unit inversion") {
  const Modulus m125 = make_modulus(5, 3);
  CHECK(inv_unit(Residue(6, m125)).value() == 21);
  CHECK(inv_unit(Residue(1, make_modulus(13, 5))).value() == 1);
  CHECK_THROWS_AS(inv_unit(Residue(5, m125)), NotUnitError);
  const Modulus big = make_modulus(1999, 11);
  const Residue a(123456789, big);
  CHECK(a * inv_unit(a) == Residue::one(big));
}

TEST_CASE("shift_down and valuation") {
  const Modulus m125 = make_modulus(5, 3);
  const Residue s = shift_down(Residue(50, m125), 1);
  CHECK(s.value() == 10);
  CHECK(s.precision() == 2);
  CHECK(shift_down(Residue::zero(m125), 2) == Residue::zero(make_modulus(5, 1)));
  const Residue t = shift_down(Residue(721, make_modulus(7, 6)), 1);
  CHECK(t.value() == 103);
  CHECK(t.modulus().value() == 16807);
  CHECK_THROWS_AS(shift_down(Residue(3, m125), 1), PrecisionError);
  CHECK_THROWS_AS(shift_down(Residue(0, m125), 3), PrecisionError);

  CHECK(valuation(Residue(50, m125)).order == 2);
  CHECK(valuation(Residue(3, m125)).order == 0);
  const Valuation zero = valuation(Residue(0, m125));
  CHECK(zero.is_zero);
  CHECK(zero.order == 3);
}

TEST_CASE("rational embedding") {
  CHECK(rational_to_residue(Rational(1, 6), make_modulus(5, 3)).value() == 21);
  CHECK(rational_to_residue(Rational(-1), make_modulus(7, 4)).value() == 2400);
  // 6 · 10 = 60 = 49 + 11
  CHECK(rational_to_residue(Rational(11, 6), make_modulus(7, 2)).value() == 10);
  CHECK(rational_to_residue(11, 6, make_modulus(7, 2)).value() == 10);
  CHECK_THROWS_AS(rational_to_residue(Rational(1, 14), make_modulus(7, 2)), NotUnitError);
}

TEST_CASE("digits and signed representatives") {
  const Residue x(720, make_modulus(7, 6));
  CHECK(x.digits() == std::vector<u64>{6, 4, 0, 2, 0, 0});
  CHECK(signed_string(Residue(48, make_modulus(7, 2))) == "-1");
}

TEST_CASE("power table matches direct exponentiation") {
  const Modulus m = make_modulus(101, 6);
  const auto table = power_table(100, m);
  for (u64 v = 0; v < 101; ++v) CHECK(table[v] == Residue(v, m).pow(100).value());
  CHECK(power_table(0, m)[0] == 1);
}
