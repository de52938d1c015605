#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "bcone/betti_table.hpp"

namespace bcone {

/// Degree sequence of a pure resolution over B, padded with infinity:
///   Free    (d0, inf, inf, ...)
///   TwoStep (d0, d1, inf, ...)
///   Tail    (d0, d1, d1+1, d1+2, ...)
class DegreeSequence {
 public:
  enum class Shape { Free, TwoStep, Tail };

  static DegreeSequence free_module(int d0) {
    return DegreeSequence(Shape::Free, d0, std::nullopt);
  }
  static DegreeSequence two_step(int d0, int d1) {
    return DegreeSequence(Shape::TwoStep, d0, d1);
  }
  static DegreeSequence tail(int d0, int d1) {
    return DegreeSequence(Shape::Tail, d0, d1);
  }

  Shape shape() const { return shape_; }
  int d0() const { return d0_; }
  std::optional<int> d1() const { return d1_; }

  /// d_n, or nullopt for infinity.
  std::optional<int> degree(int n) const {
    if (n == 0) return d0_;
    if (n == 1) return d1_;
    if (shape_ == Shape::Tail) return *d1_ + (n - 1);
    return std::nullopt;
  }

  std::string to_string() const {
    const std::string a = std::to_string(d0_);
    switch (shape_) {
      case Shape::Free:
        return "(" + a + ",inf)";
      case Shape::TwoStep:
        return "(" + a + "," + std::to_string(*d1_) + ",inf)";
      case Shape::Tail:
        return "(" + a + "," + std::to_string(*d1_) + "," +
               std::to_string(*d1_ + 1) + ",...)";
    }
    return {};
  }

  friend bool operator==(const DegreeSequence&,
                         const DegreeSequence&) = default;

 private:
  DegreeSequence(Shape s, int d0, std::optional<int> d1)
      : shape_(s), d0_(d0), d1_(d1) {
    if (d1_ && d0_ >= *d1_)
      throw std::invalid_argument("degree sequence requires d0 < d1 (got d0=" +
                                  std::to_string(d0_) +
                                  ", d1=" + std::to_string(*d1_) + ")");
  }

  Shape shape_;
  int d0_;
  std::optional<int> d1_;
};

struct PureDiagram {
  DegreeSequence degrees;
  BettiTable table;
};

/// The normalized table pi_d. Tail diagrams carry 3*2^(i-1) in row i >= 1,
/// stored canonically as rows 0..2.
inline PureDiagram make_pure_diagram(const DegreeSequence& d) {
  BettiTable t(TailMode::Canonical);
  t.set(0, d.d0(), 1);
  switch (d.shape()) {
    case DegreeSequence::Shape::Free:
      break;
    case DegreeSequence::Shape::TwoStep:
      t.set(1, *d.d1(), 1);
      break;
    case DegreeSequence::Shape::Tail:
      t.set(1, *d.d1(), 3);
      t.set(2, *d.d1() + 1, 6);
      break;
  }
  return {d, std::move(t)};
}

/// Partial order on degree sequences: d <= e when (d0 <= e0 and d1 <= e1
/// with one of them strict), or when d0, d1 agree and d_n <= e_n for all
/// n >= 2. Infinity exceeds every integer.
inline bool degseq_leq(const DegreeSequence& d, const DegreeSequence& e) {
  auto leq = [](std::optional<int> a, std::optional<int> b) {
    if (!b) return true;
    if (!a) return false;
    return *a <= *b;
  };
  const bool d0_le = d.d0() <= e.d0();
  const bool d1_le = leq(d.d1(), e.d1());
  const bool d0_eq = d.d0() == e.d0();
  const bool d1_eq = d.d1() == e.d1();
  if (d0_le && d1_le && !(d0_eq && d1_eq)) return true;
  if (!(d0_eq && d1_eq)) return false;
  // Beyond index 1 every sequence is either all-infinite or d1+n-1, so
  // comparing d_2 decides all n >= 2.
  return leq(d.degree(2), e.degree(2));
}

inline bool degseq_comparable(const DegreeSequence& d,
                              const DegreeSequence& e) {
  return degseq_leq(d, e) || degseq_leq(e, d);
}

}  // namespace bcone
