#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "bcone/rational.hpp"

namespace bcone::resolve {

/// Which coefficient field a module is resolved over.
struct FieldSpec {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Prime;
  std::uint32_t characteristic = 32003;

  static FieldSpec rationals() { return {Kind::Rationals, 0}; }
  static FieldSpec prime(std::uint32_t p) {
    if (p < 2) throw std::invalid_argument("prime field needs p >= 2");
    for (std::uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0)
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    return {Kind::Prime, p};
  }
  static FieldSpec default_field() { return prime(32003); }

  std::string to_string() const {
    return kind == Kind::Rationals ? "QQ" : "Fp " + std::to_string(characteristic);
  }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Field policy over Q.
struct RationalField {
  using value_type = Rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return a.inverse(); }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  value_type from_rational(const Rational& r) const { return r; }
};

/// Field policy over F_p with p < 2^31.
struct PrimeField {
  using value_type = std::uint32_t;

  std::uint32_t p = 32003;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(value_type a, value_type b) const {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p ? s - p : s);
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p - b);
  }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p);
  }
  value_type pow(value_type a, std::uint64_t e) const {
    value_type r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(a, p - 2);
  }
  bool is_zero(value_type a) const { return a == 0; }
  value_type reduce(std::int64_t v) const {
    const std::int64_t m = v % static_cast<std::int64_t>(p);
    return static_cast<value_type>(m < 0 ? m + p : m);
  }
  value_type from_rational(const Rational& r) const {
    const value_type d = reduce(r.den());
    if (d == 0)
      throw std::domain_error("coefficient " + r.to_string() +
                              " has denominator divisible by " +
                              std::to_string(p));
    return mul(reduce(r.num()), inv(d));
  }
};

}  // namespace bcone::resolve
