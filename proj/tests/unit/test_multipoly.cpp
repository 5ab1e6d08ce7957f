#include <doctest.h>

#include <random>

#include "supercong/multipoly.hpp"

using namespace supercong;

namespace {

MultiPoly::Binding bind_x(const std::vector<Residue>& xs) {
  return [xs](Symbol s) -> std::optional<Residue> {
    const int i = static_cast<int>(s);
    if (i < static_cast<int>(xs.size())) return xs[static_cast<std::size_t>(i)];
    return std::nullopt;
  };
}

MultiPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-9, 9), var(0, 2), exp(0, 3), den(1, 4);
  MultiPoly out;
  for (int t = 0; t < 4; ++t) {
    MultiPoly term(Rational(coef(rng), 1 << den(rng)));  // units for every odd prime
    term = term * MultiPoly::symbol(static_cast<Symbol>(var(rng)), exp(rng));
    term = term * MultiPoly::symbol(Symbol::p, exp(rng) % 2);
    out = out + term;
  }
  return out;
}

}  // namespace

TEST_CASE("symbol names") {
  CHECK(symbol_name(Symbol::B3_2) == "B3_2");
  CHECK(symbol_from_name("x4") == Symbol::x4);
  CHECK(symbol_from_name("p") == Symbol::p);
  CHECK_FALSE(symbol_from_name("y1").has_value());
}

TEST_CASE("parsing") {
  const MultiPoly a = MultiPoly::parse("2 x1 - x1^2 - x2");
  const MultiPoly b = MultiPoly(Rational(2)) * MultiPoly::symbol(Symbol::x1) - MultiPoly::symbol(Symbol::x1, 2) -
                      MultiPoly::symbol(Symbol::x2);
  CHECK(a == b);
  CHECK(MultiPoly::parse("(x1 + 1)^2") == MultiPoly::parse("x1^2 + 2 x1 + 1"));
  CHECK(MultiPoly::parse("-5/24 B1^4") == MultiPoly::parse("-(5 B1^4)/24"));
  CHECK(MultiPoly::parse("3/2 p B1") == MultiPoly::parse("p*B1*3/2"));
  CHECK(MultiPoly::parse("x1 - x1").is_zero());
  CHECK(MultiPoly::parse("p^3 B1 + p B2").min_p_exponent() == 1);
  CHECK(MultiPoly::parse("x1^4 x2 + x1").degree(Symbol::x1) == 4);
  CHECK_THROWS_AS(MultiPoly::parse("x1 +"), ParseError);
  CHECK_THROWS_AS(MultiPoly::parse("y7"), ParseError);
  CHECK_THROWS_AS(MultiPoly::parse("x1 / x2"), ParseError);
  CHECK_THROWS_AS(MultiPoly::parse("(x1"), ParseError);
  CHECK_THROWS_AS(MultiPoly::parse("x1 / 0"), ParseError);
}

TEST_CASE("printing round-trips") {
  const MultiPoly a = MultiPoly::parse("-1/120 B1^5 - 1/6 B1^2 B1_2 - 1/5 B1_4 + 7 p^2");
  CHECK(MultiPoly::parse(a.to_string()) == a);
}

TEST_CASE("evaluation") {
  const Modulus m = make_modulus(7, 3);
  const MultiPoly psi3 = MultiPoly::parse("6 x1 - 6 x1^2 + x1^3 + 3 x1 x2 - 3 x2 + 2 x3");
  const Residue one = Residue::one(m);
  CHECK(psi3.evaluate(bind_x({one, one, one}), 7, 3).value() == 3);
  CHECK_THROWS_AS(psi3.evaluate(bind_x({one, one}), 7, 3), UnboundSymbolError);
  // 1/6 at p = 5, precision 3
  CHECK(MultiPoly::parse("1/6").evaluate(bind_x({}), 5, 3).value() == 21);
  // p^e terms only need their symbols to precision - e.
  const Residue coarse(3, make_modulus(7, 1));
  const MultiPoly shifted = MultiPoly::parse("p^2 x1 + 1");
  CHECK(shifted.evaluate(bind_x({coarse}), 7, 3).value() == 3 * 49 + 1);
  CHECK_THROWS_AS(MultiPoly::parse("p x1").evaluate(bind_x({coarse}), 7, 3), PrecisionError);
  // Terms at or beyond the precision vanish.
  CHECK(MultiPoly::parse("p^3 x1 + 2").evaluate(bind_x({}), 7, 3).value() == 2);
  const MultiPoly negative = MultiPoly::symbol(Symbol::x2).rescale({{Symbol::x2, {Rational(1), -1}}});
  CHECK(negative.min_p_exponent() == -1);
  CHECK_THROWS_AS(negative.evaluate(bind_x({one, one}), 7, 3), PrecisionError);
}

TEST_CASE("rescale") {
  const MultiPoly a = MultiPoly::parse("x1^2 x2");
  const MultiPoly r = a.rescale({{Symbol::x2, {Rational(2), -1}}});
  CHECK(MultiPoly::symbol(Symbol::p) * r == MultiPoly::parse("2 x1^2 x2"));
}

TEST_CASE("property: ring axioms") {
  std::mt19937 rng(12345);
  for (int i = 0; i < 60; ++i) {
    const MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a.pow(3) == a * a * a);
    CHECK(MultiPoly::parse(a.to_string()) == a);
  }
}

TEST_CASE("property: evaluation is a ring homomorphism") {
  std::mt19937 rng(777);
  for (u64 p : {7, 13, 101}) {
    const Modulus m = make_modulus(p, 4);
    std::uniform_int_distribution<u64> digit(0, 1000000);
    for (int i = 0; i < 40; ++i) {
      const MultiPoly a = random_poly(rng), b = random_poly(rng);
      const auto bind = bind_x({Residue(digit(rng), m), Residue(digit(rng), m), Residue(digit(rng), m)});
      CHECK((a * b).evaluate(bind, p, 4) == a.evaluate(bind, p, 4) * b.evaluate(bind, p, 4));
      CHECK((a + b).evaluate(bind, p, 4) == a.evaluate(bind, p, 4) + b.evaluate(bind, p, 4));
    }
  }
}
