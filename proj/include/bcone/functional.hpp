#pragma once

#include <stdexcept>
#include <string>

#include "bcone/betti_table.hpp"

namespace bcone {

/// Identifies one of the linear functionals cutting out the cone:
///   epsilon(i,j)     v_{i,j}
///   alpha(k)         2 v_{1,k} - v_{2,k+1}
///   gamma(k)         sum_{j<=k} (3 v_{0,j} - 3 v_{1,j+1} + v_{2,j+2})
///   gamma_inf        the same sum over all j
///   doubling_eq(i,j) 2 v_{i,j} - v_{i+1,j+1}, i >= 2 (an equality)
struct Functional {
  enum class Kind { Epsilon, Alpha, Gamma, GammaInf, DoublingEq };

  Kind kind = Kind::Epsilon;
  int i = 0;
  int j = 0;  // degree; alpha/gamma store k here

  static Functional epsilon(int i, int j) {
    if (i < 0) throw std::invalid_argument("epsilon requires i >= 0");
    return {Kind::Epsilon, i, j};
  }
  static Functional alpha(int k) { return {Kind::Alpha, 0, k}; }
  static Functional gamma(int k) { return {Kind::Gamma, 0, k}; }
  static Functional gamma_inf() { return {Kind::GammaInf, 0, 0}; }
  static Functional doubling_eq(int i, int j) {
    if (i < 2) throw std::invalid_argument("doubling_eq requires i >= 2");
    return {Kind::DoublingEq, i, j};
  }

  bool is_equality() const { return kind == Kind::DoublingEq; }

  std::string to_string() const {
    switch (kind) {
      case Kind::Epsilon:
        return "epsilon(" + std::to_string(i) + "," + std::to_string(j) + ")";
      case Kind::Alpha:
        return "alpha(" + std::to_string(j) + ")";
      case Kind::Gamma:
        return "gamma(" + std::to_string(j) + ")";
      case Kind::GammaInf:
        return "gamma_inf";
      case Kind::DoublingEq:
        return "doubling_eq(" + std::to_string(i) + "," + std::to_string(j) +
               ")";
    }
    return {};
  }

  friend bool operator==(const Functional&, const Functional&) = default;
};

namespace detail {

/// sum of v_{i,j} over j <= k for row i
inline Rational row_prefix(const BettiTable& v, int i, int k) {
  Rational s;
  for (const auto& [key, x] : v.entries())
    if (key.first == i && key.second <= k) s += x;
  return s;
}

}  // namespace detail

inline Rational eval_functional(const Functional& f, const BettiTable& v) {
  using K = Functional::Kind;
  switch (f.kind) {
    case K::Epsilon:
      return v.at(f.i, f.j);
    case K::Alpha:
      return Rational(2) * v.at(1, f.j) - v.at(2, f.j + 1);
    case K::Gamma:
      return Rational(3) * detail::row_prefix(v, 0, f.j) -
             Rational(3) * detail::row_prefix(v, 1, f.j + 1) +
             detail::row_prefix(v, 2, f.j + 2);
    case K::GammaInf:
      return Rational(3) * v.row_total(0) - Rational(3) * v.row_total(1) +
             v.row_total(2);
    case K::DoublingEq:
      return Rational(2) * v.at(f.i, f.j) - v.at(f.i + 1, f.j + 1);
  }
  return {};
}

}  // namespace bcone
