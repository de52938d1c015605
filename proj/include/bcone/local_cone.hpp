#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "bcone/rational.hpp"

namespace bcone {

/// Ungraded Betti sequence (b0, b1, b2, 2 b2, 4 b2, ...) over the
/// completion of B.
struct BettiSequence {
  Rational b0, b1, b2;
  friend bool operator==(const BettiSequence&, const BettiSequence&) = default;
};

enum class LocalFunctional {
  NonNegB0,        // b0
  NonNegB1,        // b1
  NonNegB2,        // b2
  Multiplicity,    // 3 b0 + b2 - 3 b1
  Alpha,           // 2 b1 - b2
  MultiplicityEq,  // 3 b0 + b2 - 3 b1 = 0
};

inline std::string to_string(LocalFunctional f) {
  switch (f) {
    case LocalFunctional::NonNegB0: return "b0";
    case LocalFunctional::NonNegB1: return "b1";
    case LocalFunctional::NonNegB2: return "b2";
    case LocalFunctional::Multiplicity: return "3b0+b2-3b1";
    case LocalFunctional::Alpha: return "2b1-b2";
    case LocalFunctional::MultiplicityEq: return "3b0+b2-3b1=0";
  }
  return {};
}

inline Rational eval_local(LocalFunctional f, const BettiSequence& s) {
  switch (f) {
    case LocalFunctional::NonNegB0: return s.b0;
    case LocalFunctional::NonNegB1: return s.b1;
    case LocalFunctional::NonNegB2: return s.b2;
    case LocalFunctional::Multiplicity:
    case LocalFunctional::MultiplicityEq:
      return Rational(3) * s.b0 + s.b2 - Rational(3) * s.b1;
    case LocalFunctional::Alpha:
      return Rational(2) * s.b1 - s.b2;
  }
  return {};
}

struct LocalViolation {
  LocalFunctional functional;
  Rational value;
};

struct LocalVerdict {
  bool member = false;
  std::optional<LocalViolation> violation;
};

inline LocalVerdict check_local(const BettiSequence& s, bool finite_length) {
  using F = LocalFunctional;
  for (F f : {F::NonNegB0, F::NonNegB1, F::NonNegB2, F::Multiplicity, F::Alpha}) {
    const Rational v = eval_local(f, s);
    if (v.sign() < 0) return {false, LocalViolation{f, v}};
  }
  if (finite_length) {
    const Rational v = eval_local(F::MultiplicityEq, s);
    if (!v.is_zero()) return {false, LocalViolation{F::MultiplicityEq, v}};
  }
  return {true, std::nullopt};
}

/// Coefficients over the rays (1,0,0), (1,1,0), (1,3,6).
struct LocalDecomposition {
  Rational a, b, c;
};

class NotInLocalCone : public std::domain_error {
 public:
  explicit NotInLocalCone(LocalViolation v)
      : std::domain_error("sequence is not in the local cone: " +
                          to_string(v.functional) + " = " + v.value.to_string()),
        violation_(v) {}
  const LocalViolation& violation() const { return violation_; }

 private:
  LocalViolation violation_;
};

/// Solves a + b + c = b0, b + 3c = b1, 6c = b2. In the finite length cone
/// a is forced to zero.
inline LocalDecomposition decompose_local(const BettiSequence& s,
                                          bool finite_length) {
  const auto verdict = check_local(s, finite_length);
  if (!verdict.member) throw NotInLocalCone(*verdict.violation);
  const Rational c = s.b2 / Rational(6);
  const Rational b = s.b1 - Rational(3) * c;
  const Rational a = s.b0 - b - c;
  return {a, b, c};
}

}  // namespace bcone
