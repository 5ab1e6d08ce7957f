#include "supercong/multipoly.hpp"

#include <cctype>
#include <sstream>

namespace supercong {

namespace {

constexpr std::array<std::string_view, kSymbolCount> kNames = {
    "x1", "x2", "x3", "x4", "x5", "x6", "B1", "B2", "B3", "B4",
    "B5", "B6", "B1_2", "B2_2", "B3_2", "B4_2", "B1_4", "B2_4", "p"};

constexpr int kP = static_cast<int>(Symbol::p);

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MultiPoly run() {
    MultiPoly out = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor() {
    const char c = peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (c == '/') {
        ++pos_;
        const MultiPoly d = unary();
        const auto& t = d.terms();
        if (t.size() != 1 || t.begin()->first != MultiPoly::Exponents{}) fail("divisor must be a nonzero constant");
        acc = acc * MultiPoly(Rational(1) / t.begin()->second);
      } else if (starts_factor()) {
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  MultiPoly unary() {
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return base.pow(std::stoi(std::string(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  MultiPoly atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      const auto sym = symbol_from_name(name);
      if (!sym) fail("unknown symbol '" + std::string(name) + "'");
      return MultiPoly::symbol(*sym);
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view symbol_name(Symbol s) { return kNames[static_cast<std::size_t>(s)]; }

std::optional<Symbol> symbol_from_name(std::string_view name) {
  for (int i = 0; i < kSymbolCount; ++i) {
    if (kNames[static_cast<std::size_t>(i)] == name) return static_cast<Symbol>(i);
  }
  return std::nullopt;
}

MultiPoly::MultiPoly(const Rational& c) { add_term(Exponents{}, c); }

MultiPoly MultiPoly::symbol(Symbol s, int exponent) {
  Exponents e{};
  e[static_cast<std::size_t>(s)] = exponent;
  MultiPoly out;
  out.add_term(e, Rational(1));
  return out;
}

MultiPoly MultiPoly::parse(std::string_view text) { return Parser(text).run(); }

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  // Callers may hand in non-canonical fractions; equality needs canonical ones.
  Rational v = c;
  v.canonicalize();
  if (v == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, v);
  if (fresh) return;
  it->second += v;
  if (it->second == 0) terms_.erase(it);
}

int MultiPoly::min_p_exponent() const {
  if (terms_.empty()) return 0;
  int lo = terms_.begin()->first[kP];
  for (const auto& [e, c] : terms_) lo = std::min(lo, e[kP]);
  return lo;
}

int MultiPoly::degree(Symbol s) const {
  int hi = 0;
  for (const auto& [e, c] : terms_) hi = std::max(hi, e[static_cast<std::size_t>(s)]);
  return hi;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e;
      for (int i = 0; i < kSymbolCount; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(int exponent) const {
  if (exponent < 0) throw ParseError("negative polynomial power");
  MultiPoly out(Rational(1));
  for (int i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

MultiPoly MultiPoly::rescale(const std::map<Symbol, std::pair<Rational, int>>& map) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    Rational nc = c;
    for (const auto& [s, sub] : map) {
      const int k = e[static_cast<std::size_t>(s)];
      if (k == 0) continue;
      for (int i = 0; i < k; ++i) nc *= sub.first;
      ne[kP] += k * sub.second;
    }
    out.add_term(ne, nc);
  }
  return out;
}

Residue MultiPoly::evaluate(const Binding& bind, u64 p, int precision) const {
  const Modulus top = make_modulus(p, precision);
  Residue acc = Residue::zero(top);
  for (const auto& [e, c] : terms_) {
    const int pe = e[kP];
    if (pe < 0) throw PrecisionError("term with p^" + std::to_string(pe) + " cannot be evaluated");
    if (pe >= precision) continue;
    const int work = precision - pe;
    const Modulus mod = make_modulus(p, work);
    Residue term = rational_to_residue(c, mod);
    for (int i = 0; i < kSymbolCount; ++i) {
      if (i == kP || e[i] == 0) continue;
      const auto s = static_cast<Symbol>(i);
      const std::optional<Residue> v = bind(s);
      if (!v) throw UnboundSymbolError("no value bound to " + std::string(symbol_name(s)));
      if (v->prime() != p) throw PrimeMismatchError("binding for " + std::string(symbol_name(s)) + " uses another prime");
      if (v->precision() < work) {
        throw PrecisionError(std::string(symbol_name(s)) + " is known mod p^" + std::to_string(v->precision()) +
                             " but the term needs p^" + std::to_string(work));
      }
      term = term * v->reduce(work).pow(static_cast<u64>(e[i]));
    }
    acc = acc + shift_up(term, pe);
  }
  return acc;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    bool any = false;
    if (mag != 1 || e == Exponents{}) {
      out << mag.get_str();
      any = true;
    }
    for (int i = 0; i < kSymbolCount; ++i) {
      if (e[i] == 0) continue;
      out << (any ? "*" : "") << kNames[static_cast<std::size_t>(i)];
      if (e[i] != 1) out << "^" << e[i];
      any = true;
    }
  }
  return out.str();
}

}  // namespace supercong
