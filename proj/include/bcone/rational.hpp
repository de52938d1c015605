#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bcone {

/// Exact rational number over 64-bit integers.
///
/// Always kept in lowest terms with a positive denominator. Intermediate
/// products are formed in 128 bits; a result that does not fit back into
/// 64 bits throws std::overflow_error rather than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(implicit)
  Rational(std::int64_t n, std::int64_t d) { *this = from_wide(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Rational operator-() const {
    if (num_ == std::numeric_limits<std::int64_t>::min())
      throw std::overflow_error("rational negation overflow");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_)
      return from_wide(wide(a.num_) + b.num_, a.den_);
    return from_wide(wide(a.num_) * b.den_ + wide(b.num_) * a.den_,
                     wide(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_)
      return from_wide(wide(a.num_) - b.num_, a.den_);
    return from_wide(wide(a.num_) * b.den_ - wide(b.num_) * a.den_,
                     wide(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return from_wide(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return wide(a.num_) * b.den_ <=> wide(b.num_) * a.den_;
  }

  Rational inverse() const { return Rational(1) / *this; }
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  /// "a" for integers, "a/b" otherwise.
  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Accepts "a", "-a", "+a" and "a/b" with b nonzero.
  static Rational parse(std::string_view text) {
    auto fail = [&]() -> Rational {
      throw std::invalid_argument("malformed rational: '" + std::string(text) +
                                  "'");
    };
    if (text.empty()) return fail();
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view s, bool allow_sign) -> std::int64_t {
      if (s.empty()) fail();
      std::size_t pos = 0;
      bool neg = false;
      if (allow_sign && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        pos = 1;
      }
      if (pos == s.size()) fail();
      __int128 acc = 0;
      for (; pos < s.size(); ++pos) {
        const char c = s[pos];
        if (c < '0' || c > '9') fail();
        acc = acc * 10 + (c - '0');
        if (acc > std::numeric_limits<std::int64_t>::max()) fail();
      }
      return static_cast<std::int64_t>(neg ? -acc : acc);
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text, true));
    const auto n = parse_int(text.substr(0, slash), true);
    const auto d = parse_int(text.substr(slash + 1), false);
    if (d == 0) return fail();
    return Rational(n, d);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  using wide_t = __int128;
  static wide_t wide(std::int64_t v) { return static_cast<wide_t>(v); }

  static wide_t gcd_wide(wide_t a, wide_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const wide_t t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_wide(wide_t n, wide_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const wide_t g = gcd_wide(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr wide_t lo = std::numeric_limits<std::int64_t>::min() + wide_t{1};
    constexpr wide_t hi = std::numeric_limits<std::int64_t>::max();
    if (n < lo || n > hi || d > hi)
      throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = n == 0 ? 1 : static_cast<std::int64_t>(d);
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace bcone
