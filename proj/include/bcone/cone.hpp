#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bcone/betti_table.hpp"
#include "bcone/degree_sequence.hpp"
#include "bcone/functional.hpp"

namespace bcone {

struct DecompositionTerm {
  DegreeSequence degrees;
  Rational coefficient;
};

struct Decomposition {
  std::vector<DecompositionTerm> terms;

  /// sum of coefficient * pi_d, in canonical mode
  BettiTable recombine() const {
    BettiTable sum(TailMode::Canonical);
    for (const auto& t : terms)
      sum = table_arith(1, sum, t.coefficient, make_pure_diagram(t.degrees).table);
    return sum;
  }
};

struct Violation {
  Functional functional;
  Rational value;
};

struct MembershipVerdict {
  bool member = false;
  std::variant<Decomposition, Violation> certificate;

  const Decomposition& decomposition() const {
    return std::get<Decomposition>(certificate);
  }
  const Violation& violation() const { return std::get<Violation>(certificate); }
};

class NotInCone : public std::domain_error {
 public:
  explicit NotInCone(Violation v)
      : std::domain_error("table is not in the cone: " +
                          v.functional.to_string() + " = " +
                          v.value.to_string()),
        violation_(std::move(v)) {}
  const Violation& violation() const { return violation_; }

 private:
  Violation violation_;
};

namespace detail {

/// Doubling equalities among the stored rows of an explicit table.
/// A literal table is a truncation, so only pairs of rows (i, i+1) that
/// are both inside the stored range are compared.
inline std::optional<Violation> first_doubling_violation(const BettiTable& v) {
  if (v.mode() != TailMode::Explicit) return std::nullopt;
  const int top = v.max_row();
  for (int i = 2; i < top; ++i) {
    std::vector<int> degrees;
    for (const auto& [k, x] : v.entries()) {
      if (k.first == i) degrees.push_back(k.second);
      if (k.first == i + 1) degrees.push_back(k.second - 1);
    }
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    for (int j : degrees) {
      const auto f = Functional::doubling_eq(i, j);
      const Rational val = eval_functional(f, v);
      if (!val.is_zero()) return Violation{f, val};
    }
  }
  return std::nullopt;
}

/// First violated inequality of F on a canonical table, scanning epsilon,
/// then alpha, then gamma, each by increasing index. `eps_entries` are the
/// literal entries scanned for epsilon (all rows, for explicit tables).
inline std::optional<Violation> first_inequality_violation(
    const BettiTable& canon, const BettiTable::Entries& eps_entries) {
  for (const auto& [k, x] : eps_entries)
    if (x.sign() < 0) return Violation{Functional::epsilon(k.first, k.second), x};
  const auto range = canon.degree_range();
  if (!range) return std::nullopt;
  const auto [lo, hi] = *range;
  for (int k = lo - 1; k <= hi + 1; ++k) {
    const auto f = Functional::alpha(k);
    const Rational val = eval_functional(f, canon);
    if (val.sign() < 0) return Violation{f, val};
  }
  // gamma_k vanishes for k < lo - 2 and is constant for k >= hi.
  for (int k = lo - 2; k <= hi; ++k) {
    const auto f = Functional::gamma(k);
    const Rational val = eval_functional(f, canon);
    if (val.sign() < 0) return Violation{f, val};
  }
  return std::nullopt;
}

inline std::optional<Violation> first_violation(const BettiTable& v) {
  if (auto eq = first_doubling_violation(v)) return eq;
  return first_inequality_violation(v.canonical(), v.entries());
}

}  // namespace detail

/// Residual trace of a greedy decomposition: residuals[s] is the table
/// after s subtraction steps (residuals[0] is the input).
struct DecompositionTrace {
  Decomposition decomposition;
  std::vector<BettiTable> residuals;
};

/// Greedy peeling of pure diagrams.
///
/// Each step takes d0 = lowest degree in row 0 and d1 = lowest degree in
/// row 1 (infinite when row 1 is empty). A Tail diagram is used when row 2
/// has mass at d1 + 1, otherwise TwoStep (or Free). The coefficient is the
/// largest c with v - c pi_d still in F, found by an exact ratio test over
/// the functionals that pi_d decreases.
inline DecompositionTrace decompose_with_trace(const BettiTable& input) {
  if (auto bad = detail::first_violation(input)) throw NotInCone(*bad);

  DecompositionTrace out;
  BettiTable v = input.canonical();
  out.residuals.push_back(v);
  const std::size_t cap = 3 * v.support_size() + 3;

  while (!v.empty()) {
    if (out.decomposition.terms.size() >= cap)
      throw std::logic_error("decompose: iteration cap " + std::to_string(cap) +
                             " exceeded; residual support " +
                             std::to_string(v.support_size()));

    const int d0 = *v.row_min(0);
    const auto d1 = v.row_min(1);
    const DegreeSequence d =
        !d1 ? DegreeSequence::free_module(d0)
        : v.stored(2, *d1 + 1).sign() > 0 ? DegreeSequence::tail(d0, *d1)
                                          : DegreeSequence::two_step(d0, *d1);
    const BettiTable pi = make_pure_diagram(d).table;

    std::vector<Functional> candidates;
    for (const auto& [k, x] : pi.entries())
      candidates.push_back(Functional::epsilon(k.first, k.second));
    auto range = v.degree_range();
    const auto pr = pi.degree_range();
    range->first = std::min(range->first, pr->first);
    range->second = std::max(range->second, pr->second);
    for (int k = range->first - 2; k <= range->second + 1; ++k) {
      candidates.push_back(Functional::alpha(k));
      candidates.push_back(Functional::gamma(k));
    }

    std::optional<Rational> best;
    for (const auto& f : candidates) {
      const Rational drop = eval_functional(f, pi);
      if (drop.sign() <= 0) continue;
      const Rational ratio = eval_functional(f, v) / drop;
      if (!best || ratio < *best) best = ratio;
    }
    if (!best || best->sign() <= 0)
      throw std::logic_error("decompose: no progress at " + d.to_string());

    out.decomposition.terms.push_back({d, *best});
    v = table_arith(1, v, -*best, pi);
    out.residuals.push_back(v);
  }
  return out;
}

/// Requires v in the cone; throws NotInCone otherwise.
inline Decomposition decompose(const BettiTable& v) {
  return decompose_with_trace(v).decomposition;
}

/// Membership in the cone of Betti tables of all finitely generated graded
/// B-modules. Members come with a decomposition into pure diagrams.
inline MembershipVerdict check_graded(const BettiTable& v) {
  if (auto bad = detail::first_violation(v)) return {false, *bad};
  return {true, decompose(v)};
}

/// Membership in the finite length cone: the graded cone plus gamma_inf = 0.
inline MembershipVerdict check_finite_length(const BettiTable& v) {
  auto verdict = check_graded(v);
  if (!verdict.member) return verdict;
  const auto f = Functional::gamma_inf();
  const Rational val = eval_functional(f, v.canonical());
  if (!val.is_zero()) return {false, Violation{f, val}};
  return verdict;
}

}  // namespace bcone
