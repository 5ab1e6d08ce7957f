#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
//
// The symbol set is fixed: x1..x6 for the ψ/P̃ tables, B1..B6 and the
// secondary divided Bernoulli symbols B1_2..B4_2, B1_4, B2_4 for the ω and
// power-sum formulas, and the indeterminate p. Exponents of p may go negative
// during substitution; evaluation refuses such terms.

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "supercong/residue.hpp"

namespace supercong {

enum class Symbol : int {
  x1, x2, x3, x4, x5, x6,
  B1, B2, B3, B4, B5, B6,
  B1_2, B2_2, B3_2, B4_2, B1_4, B2_4,
  p,
};

inline constexpr int kSymbolCount = 19;

std::string_view symbol_name(Symbol s);
std::optional<Symbol> symbol_from_name(std::string_view name);

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnboundSymbolError : public Error {
 public:
  using Error::Error;
};

class MultiPoly {
 public:
  using Exponents = std::array<int, kSymbolCount>;
  using Terms = std::map<Exponents, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(const Rational& c);
  static MultiPoly symbol(Symbol s, int exponent = 1);

  // Grammar: sums of products of rational literals, symbols, powers (^ with a
  // non-negative integer), parentheses and unary minus. Juxtaposition means
  // multiplication; '/' only accepts a constant divisor.
  static MultiPoly parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Smallest exponent of p over all terms (0 for the zero polynomial).
  int min_p_exponent() const;
  int degree(Symbol s) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly pow(int exponent) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  // Replaces each symbol s by scale[s] · s · p^shift[s] (unlisted symbols
  // keep scale 1, shift 0).
  MultiPoly rescale(const std::map<Symbol, std::pair<Rational, int>>& map) const;

  // Value mod p^precision. Each term c · p^e · m is evaluated with m's symbols
  // reduced to precision - e, so low-precision inputs may sit behind powers
  // of p. Throws PrecisionError on negative p-exponents or when a bound value
  // is too coarse, UnboundSymbolError when the binding has no value.
  using Binding = std::function<std::optional<Residue>(Symbol)>;
  Residue evaluate(const Binding& bind, u64 p, int precision) const;

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  Terms terms_;
};

}  // namespace supercong
