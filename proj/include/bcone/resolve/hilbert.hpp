#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcone/betti_table.hpp"
#include "bcone/functional.hpp"
#include "bcone/resolve/resolution.hpp"

namespace bcone::resolve {

/// H_M(t) = p(t) / (1 - t) read off the graded pieces.
struct HilbertData {
  int lo = 0;                               // degree of dims[0] and numerator[0]
  std::vector<std::int64_t> dims;           // dim M_e for e = lo .. deg_bound
  std::vector<std::int64_t> numerator;      // p(t) = sum numerator[k] t^(lo+k)
  Rational multiplicity;                    // e(M) = p(1)

  std::string numerator_string() const {
    std::string out;
    for (std::size_t k = 0; k < numerator.size(); ++k) {
      const auto c = numerator[k];
      if (c == 0) continue;
      const int e = lo + static_cast<int>(k);
      const auto mag = c < 0 ? -c : c;
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      if (e == 0)
        out += std::to_string(mag);
      else {
        if (mag != 1) out += std::to_string(mag) + "*";
        out += e == 1 ? "t" : "t^" + std::to_string(e);
      }
    }
    return out.empty() ? "0" : out;
  }
};

class NotStabilized : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class F>
HilbertData hilbert_over(const F& f, const GradedModuleB& m, int deg_bound) {
  // From degree R + 1 on every summand of F sits in positive degree, where
  // x, y, z act as the three coordinate projections; the relations are then
  // stable under them and dim M_d is constant.
  const int settled = m.max_presentation_degree() + 1;
  if (deg_bound < settled)
    throw NotStabilized("dim M_d is only known to be constant from degree " +
                        std::to_string(settled) + "; deg_bound is " +
                        std::to_string(deg_bound));
  const auto pieces = presentation_pieces(f, m, deg_bound);
  HilbertData h;
  h.lo = pieces.lo;
  for (auto d : pieces.dims) h.dims.push_back(static_cast<std::int64_t>(d));
  std::int64_t prev = 0;
  for (auto d : h.dims) {
    h.numerator.push_back(d - prev);
    prev = d;
  }
  while (!h.numerator.empty() && h.numerator.back() == 0) h.numerator.pop_back();
  h.multiplicity = Rational(h.dims.back());
  return h;
}

/// Requires deg_bound > max_presentation_degree().
inline HilbertData hilbert_data(const GradedModuleB& m, int deg_bound) {
  if (m.field.kind == FieldSpec::Kind::Rationals)
    return hilbert_over(RationalField{}, m, deg_bound);
  return hilbert_over(PrimeField{m.field.characteristic}, m, deg_bound);
}

/// e(Omega(M)) = 3 beta_1 - beta_2 from the row totals of a Betti table.
inline Rational syzygy_multiplicity(const BettiTable& betti) {
  return Rational(3) * betti.row_total(1) - betti.row_total(2);
}

/// e(M) from the Hilbert function against gamma_inf = 3 b0 - 3 b1 + b2 of
/// the resolved table.
inline bool mult_identity_check(const GradedModuleB& m, int deg_bound,
                                int hom_bound) {
  const auto res = min_free_resolution(m, deg_bound, hom_bound);
  const auto h = hilbert_data(m, deg_bound);
  return eval_functional(Functional::gamma_inf(), res.betti) == h.multiplicity;
}

}  // namespace bcone::resolve
