#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcone/betti_table.hpp"
#include "bcone/degree_sequence.hpp"
#include "bcone/functional.hpp"
#include "bcone/verify/double_description.hpp"

namespace bcone::verify {

/// Finite window of canonical coordinates (i, j), i in {0,1,2},
/// j in [jmin, jmax]. Coordinate (i, j) has index i * width + (j - jmin).
struct Window {
  int jmin = 0;
  int jmax = 0;

  Window(int lo, int hi) : jmin(lo), jmax(hi) {
    if (lo > hi) throw std::invalid_argument("window needs jmin <= jmax");
  }

  std::size_t width() const { return static_cast<std::size_t>(jmax - jmin + 1); }
  std::size_t dimension() const { return 3 * width(); }
  bool contains(int i, int j) const { return i >= 0 && i <= 2 && j >= jmin && j <= jmax; }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * width() + static_cast<std::size_t>(j - jmin);
  }

  /// A canonical table with support inside the window.
  bool holds(const BettiTable& t) const {
    if (t.mode() != TailMode::Canonical) return false;
    return std::all_of(t.entries().begin(), t.entries().end(),
                       [&](const auto& e) { return contains(e.first.first, e.first.second); });
  }

  RatVec to_vector(const BettiTable& t) const {
    if (!holds(t)) throw std::invalid_argument("table is not supported in the window");
    RatVec v(dimension(), Rational(0));
    for (const auto& [k, x] : t.entries()) v[index(k.first, k.second)] = x;
    return v;
  }

  BettiTable to_table(const RatVec& v) const {
    BettiTable t(TailMode::Canonical);
    for (int i = 0; i <= 2; ++i)
      for (int j = jmin; j <= jmax; ++j) t.set(i, j, v[index(i, j)]);
    return t;
  }

  std::string to_string() const {
    return "[" + std::to_string(jmin) + "," + std::to_string(jmax) + "]";
  }
};

/// Every pi_d whose canonical support lies in the window. With
/// `finite_length` the Free shapes are left out.
inline std::vector<PureDiagram> window_generators(const Window& w,
                                                  bool finite_length = false) {
  std::vector<PureDiagram> out;
  for (int d0 = w.jmin; d0 <= w.jmax; ++d0) {
    if (!finite_length) out.push_back(make_pure_diagram(DegreeSequence::free_module(d0)));
    for (int d1 = d0 + 1; d1 <= w.jmax; ++d1) {
      out.push_back(make_pure_diagram(DegreeSequence::two_step(d0, d1)));
      if (d1 + 1 <= w.jmax) out.push_back(make_pure_diagram(DegreeSequence::tail(d0, d1)));
    }
  }
  return out;
}

struct WindowFacet {
  Functional id;
  RatVec coefficients;
};

/// Restriction of a functional to the window: its value on the table with
/// a single 1 at each coordinate.
inline RatVec restrict_functional(const Window& w, const Functional& f) {
  RatVec c(w.dimension(), Rational(0));
  for (int i = 0; i <= 2; ++i)
    for (int j = w.jmin; j <= w.jmax; ++j) {
      BettiTable unit(TailMode::Canonical);
      unit.set(i, j, 1);
      c[w.index(i, j)] = eval_functional(f, unit);
    }
  return c;
}

/// Which inequality families to include; dropping one is an ablation.
struct FacetFamilies {
  bool alpha = true;
  bool gamma = true;
};

/// The cone's functionals that are not identically zero on window tables:
/// epsilon at every coordinate, alpha_k for k in [jmin-1, jmax] and gamma_k
/// for k in [jmin-2, jmax]. Outside these ranges alpha vanishes and gamma_k
/// either vanishes or repeats gamma_jmax.
inline std::vector<WindowFacet> window_facets(const Window& w,
                                              FacetFamilies families = {}) {
  std::vector<WindowFacet> out;
  for (int i = 0; i <= 2; ++i)
    for (int j = w.jmin; j <= w.jmax; ++j) {
      const auto f = Functional::epsilon(i, j);
      out.push_back({f, restrict_functional(w, f)});
    }
  if (families.alpha)
    for (int k = w.jmin - 1; k <= w.jmax; ++k) {
      const auto f = Functional::alpha(k);
      out.push_back({f, restrict_functional(w, f)});
    }
  if (families.gamma)
    for (int k = w.jmin - 2; k <= w.jmax; ++k) {
      const auto f = Functional::gamma(k);
      out.push_back({f, restrict_functional(w, f)});
    }
  return out;
}

/// Deterministic nonnegative combination of n_terms window generators.
/// Uses std::minstd_rand (Park-Miller: x <- 48271 x mod 2^31 - 1) seeded
/// with `seed`; each term draws a generator index, then a numerator in
/// [1, 12] and a denominator in [1, 6], in that order.
inline BettiTable random_cone_point(const Window& w, int n_terms, std::uint32_t seed) {
  if (n_terms < 0) throw std::invalid_argument("n_terms must be >= 0");
  const auto gens = window_generators(w);
  std::minstd_rand rng(seed);
  BettiTable out(TailMode::Canonical);
  for (int t = 0; t < n_terms; ++t) {
    const auto& g = gens[rng() % gens.size()];
    const auto num = static_cast<std::int64_t>(1 + rng() % 12);
    const auto den = static_cast<std::int64_t>(1 + rng() % 6);
    out = table_arith(1, out, Rational(num, den), g.table);
  }
  return out;
}

}  // namespace bcone::verify
