#pragma once

#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bcone/rational.hpp"

namespace bcone::resolve {

enum class Var { None, X, Y, Z };

/// A standard monomial of B = k[x,y,z]/(xy,yz,xz): 1, x^a, y^a or z^a.
struct Monomial {
  Var var = Var::None;
  int exp = 0;

  static Monomial one() { return {}; }
  static Monomial power(Var v, int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e == 0 || v == Var::None) return {};
    return {v, e};
  }

  int degree() const { return exp; }

  /// Product in B; nullopt when it vanishes (a mixed monomial).
  std::optional<Monomial> times(const Monomial& o) const {
    if (var == Var::None) return o;
    if (o.var == Var::None) return *this;
    if (var != o.var) return std::nullopt;
    return Monomial{var, exp + o.exp};
  }

  std::string to_string() const {
    if (var == Var::None) return "1";
    const char* name = var == Var::X ? "x" : var == Var::Y ? "y" : "z";
    return exp == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(exp);
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.exp <=> b.exp; c != 0) return c;
    return a.var <=> b.var;
  }
};

/// Basis of B_d: {1} for d = 0 and {x^d, y^d, z^d} for d >= 1.
inline std::vector<Monomial> monomial_basis(int d) {
  if (d < 0) return {};
  if (d == 0) return {Monomial::one()};
  return {Monomial::power(Var::X, d), Monomial::power(Var::Y, d),
          Monomial::power(Var::Z, d)};
}

/// Element of B with rational coefficients, stored reduced modulo
/// (xy, yz, xz): only standard monomials ever appear.
class BPolynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  BPolynomial() = default;
  BPolynomial(const Rational& c) { add_term(Monomial::one(), c); }  // NOLINT
  BPolynomial(const Monomial& m, const Rational& c = 1) { add_term(m, c); }

  static BPolynomial variable(Var v) { return BPolynomial(Monomial::power(v, 1)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const Rational& c) {
    const Rational s = coefficient(m) + c;
    if (s.is_zero())
      terms_.erase(m);
    else
      terms_[m] = s;
  }

  Rational coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Common degree of all terms; nullopt for zero or inhomogeneous input.
  std::optional<int> homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
      if (d && *d != m.degree()) return std::nullopt;
      d = m.degree();
    }
    return d;
  }

  friend BPolynomial operator+(BPolynomial a, const BPolynomial& b) {
    for (const auto& [m, c] : b.terms_) a.add_term(m, c);
    return a;
  }
  friend BPolynomial operator-(BPolynomial a, const BPolynomial& b) {
    for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
    return a;
  }
  BPolynomial operator-() const { return BPolynomial() - *this; }

  friend BPolynomial operator*(const BPolynomial& a, const BPolynomial& b) {
    BPolynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        if (auto m = ma.times(mb)) out.add_term(*m, ca * cb);
    return out;
  }

  BPolynomial pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    BPolynomial r(Rational(1)), base = *this;
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const BPolynomial&, const BPolynomial&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational coef = c;
      if (!first) {
        out += coef.sign() < 0 ? " - " : " + ";
        coef = coef.abs();
      } else if (coef.sign() < 0 && m.var != Var::None && coef == Rational(-1)) {
        out += "-";
        coef = 1;
      }
      first = false;
      if (m.var == Var::None)
        out += coef.to_string();
      else if (coef == Rational(1))
        out += m.to_string();
      else
        out += coef.to_string() + "*" + m.to_string();
    }
    return out;
  }

 private:
  Terms terms_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

/// Recursive descent over  expr := ['+'|'-'] term (('+'|'-') term)*
///                          term := factor ('*' factor)*
///                        factor := atom ('^' integer)?
///                          atom := number ['/' number] | x | y | z | '(' expr ')'
class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  BPolynomial parse() {
    BPolynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(s_) + "': " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::int64_t integer() {
    skip();
    const auto start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected a number");
    try {
      return Rational::parse(s_.substr(start, pos_ - start)).num();
    } catch (const std::invalid_argument&) {
      fail("number out of range");
    }
  }

  BPolynomial expr() {
    BPolynomial acc;
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    BPolynomial t = term();
    acc = negate ? -t : t;
    while (true) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }
  BPolynomial term() {
    BPolynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }
  BPolynomial factor() {
    BPolynomial base = atom();
    if (eat('^')) {
      const auto e = integer();
      if (e > 10000) fail("exponent too large");
      base = base.pow(static_cast<int>(e));
    }
    return base;
  }
  BPolynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      BPolynomial inner = expr();
      if (!eat(')')) fail("missing ')'");
      return inner;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      return BPolynomial::variable(c == 'x' ? Var::X : c == 'y' ? Var::Y : Var::Z);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto n = integer();
      if (eat('/')) {
        const auto d = integer();
        if (d == 0) fail("zero denominator");
        return BPolynomial(Rational(n, d));
      }
      return BPolynomial(Rational(n));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial in x, y, z with + - * ^, parentheses and rational
/// coefficients, reducing modulo (xy, yz, xz) as it goes.
inline BPolynomial parse_bpoly(std::string_view text) {
  return detail::PolyParser(text).parse();
}

}  // namespace bcone::resolve
