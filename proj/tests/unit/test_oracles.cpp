#include <doctest.h>

#include <gmpxx.h>

#include "supercong/oracles.hpp"

using namespace supercong;

TEST_CASE("Fermat quotients") {
  CHECK(fermat_quotient(2, 5, 2).value() == 3);
  CHECK(fermat_quotient(6, 7, 2).value() == 1);
  CHECK(fermat_quotient(1, 7, 3).is_zero());
  CHECK_THROWS_AS(fermat_quotient(14, 7, 2), NotUnitError);
  const auto all = fermat_quotients(13, 4);
  REQUIRE(all.size() == 12);
  for (u64 a = 1; a < 13; ++a) CHECK(all[a - 1] == fermat_quotient(a, 13, 4));
}

TEST_CASE("Fermat quotient power sums") {
  CHECK(q_power_sum(1, 5, 2).value() == 20);
  CHECK(q_power_sum(1, 7, 5).value() == 9595);
  CHECK(q_power_sum(2, 3, 1).value() == 1);
  CHECK(q_power_sum(2, 7, 2).value() == 23);
  const auto sums = q_power_sums(6, 11, 5);
  REQUIRE(sums.size() == 6);
  for (int n = 1; n <= 6; ++n) CHECK(sums[n - 1] == q_power_sum(n, 11, 5));
}

TEST_CASE("scaled power sums") {
  const auto qt = q_tilde(4, 7, 3);
  REQUIRE(qt.size() == 4);
  CHECK(qt[0] == q_power_sum(1, 7, 3));
  // p/2 · Q_p(2)
  CHECK(qt[1] == mul_by_p_power(q_power_sum(2, 7, 3), 1) * inv_unit(Residue(2, make_modulus(7, 3))));
  CHECK_THROWS(q_tilde(7, 7, 3));
}

TEST_CASE("modified power sums") {
  CHECK(sh_mod(4, 5, 1).value() == 0);
  CHECK(sh_mod(0, 7, 3).is_zero());
  // (1 + 16 + 81 + 256 - 4)/5 = 70
  CHECK(sh_mod(4, 5, 3).value() == 70);
}

TEST_CASE("factorials and Wilson quotients") {
  CHECK(factorial_mod(5, 2).value() == 24);
  CHECK(factorial_mod(7, 2).value() == 34);
  CHECK(wilson_quotient(5, 3).wilson_quotient.value() == 5);
  CHECK(wilson_quotient(7, 3).wilson_quotient.value() == 103);
  CHECK(wilson_quotient(13, 8).wilson_quotient.value() == 36846277);
  CHECK(wilson_quotient(11, 6).wilson_quotient.value() == 329891);
  const WilsonRecord w = wilson_quotient(13, 3);
  CHECK(w.factorial_mod.value() == 5069);
  CHECK(w.digits == std::vector<u64>{12, 12, 3, 2});
}

TEST_CASE("property: factorial is -1 mod p") {
  for (u64 p = 3; p < 400; p += 2) {
    if (!is_prime(p)) continue;
    CHECK(factorial_mod(p, 1).value() == p - 1);
  }
}

TEST_CASE("property: Wilson quotient agrees with GMP factorial") {
  for (u64 p : {17, 29, 101, 211}) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), p - 1);
    const mpz_class w = (f + 1) / p;
    mpz_class mod;
    mpz_ui_pow_ui(mod.get_mpz_t(), p, 5);
    const mpz_class expect = w % mod;
    CHECK(wilson_quotient(p, 5).wilson_quotient.to_string() == expect.get_str());
  }
}

TEST_CASE("property: q_p(ab) = q_p(a) + q_p(b) mod p") {
  for (u64 p : {7, 11, 31}) {
    for (u64 a = 1; a < p; ++a) {
      for (u64 b = 1; b < p; ++b) {
        CHECK(fermat_quotient(a * b, p, 1) == fermat_quotient(a, p, 1) + fermat_quotient(b, p, 1));
      }
    }
  }
}
