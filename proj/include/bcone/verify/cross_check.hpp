#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcone/resolve/field.hpp"
#include "bcone/resolve/linalg.hpp"
#include "bcone/verify/double_description.hpp"
#include "bcone/verify/window.hpp"

namespace bcone::verify {

struct CrossCheckOptions {
  bool finite_length = false;  // add gamma_inf = 0, drop Free generators
  FacetFamilies families{};
  std::size_t max_width = 6;
};

struct GeneratorViolation {
  DegreeSequence degrees;
  Functional functional;
  Rational value;
};

struct WindowReport {
  std::size_t n_generators = 0;
  std::size_t n_rays = 0;    // extreme rays of the halfspace cone
  std::size_t n_facets = 0;  // irredundant inequalities
  bool equal = false;
  /// extreme rays of the halfspace cone that are not generators
  std::vector<BettiTable> witnesses;
  /// generators violating a window facet (empty whenever D is inside F)
  std::vector<GeneratorViolation> uncovered;
};

class WindowTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

namespace detail {

inline std::size_t rank_of(const std::vector<RatVec>& rows, std::size_t width) {
  if (rows.empty()) return 0;
  return resolve::rref(resolve::RationalField{}, rows, width).rank();
}

}  // namespace detail

/// Compares the cone spanned by the window generators with the cone cut
/// out by the window facets.
///
/// Both inclusions are checked exactly. Generators are evaluated on every
/// facet. In the other direction it suffices to look at extreme rays of the
/// halfspace cone H: once every generator lies in H, an extreme ray of H is
/// a nonnegative combination of generators only if it is a positive
/// multiple of one of them, so membership reduces to matching primitive
/// vectors.
///
/// Restricting to a window is faithful: a table supported in the window
/// that decomposes into pure diagrams uses only diagrams supported in the
/// window, because the coefficients are nonnegative and cannot cancel.
inline WindowReport cross_check(const Window& w, const CrossCheckOptions& opt = {}) {
  if (w.width() > opt.max_width)
    throw WindowTooLarge("window " + w.to_string() + " has width " +
                         std::to_string(w.width()) + " > cap " +
                         std::to_string(opt.max_width));
  const std::size_t n = w.dimension();
  const auto gens = window_generators(w, opt.finite_length);
  auto facets = window_facets(w, opt.families);

  std::vector<RatVec> halfspaces;  // everything except the orthant
  for (const auto& f : facets)
    if (f.id.kind != Functional::Kind::Epsilon) halfspaces.push_back(f.coefficients);
  std::vector<RatVec> all_facets;
  for (const auto& f : facets) all_facets.push_back(f.coefficients);
  if (opt.finite_length) {
    auto g = restrict_functional(w, Functional::gamma_inf());
    RatVec neg(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) neg[k] = -g[k];
    halfspaces.push_back(g);
    halfspaces.push_back(neg);
    all_facets.push_back(g);
    all_facets.push_back(neg);
    facets.push_back({Functional::gamma_inf(), g});
  }

  WindowReport rep;
  rep.n_generators = gens.size();

  std::vector<RatVec> gen_vecs;
  for (const auto& g : gens) {
    const RatVec v = w.to_vector(g.table);
    for (const auto& f : facets) {
      const Rational val = dot(f.coefficients, v);
      const bool bad = f.id.kind == Functional::Kind::GammaInf && opt.finite_length
                           ? !val.is_zero()
                           : val.sign() < 0;
      if (bad) rep.uncovered.push_back({g.degrees, f.id, val});
    }
    gen_vecs.push_back(primitive(v));
  }

  const auto rays = extreme_rays(n, halfspaces);
  rep.n_rays = rays.size();
  for (const auto& r : rays)
    if (std::find(gen_vecs.begin(), gen_vecs.end(), r) == gen_vecs.end())
      rep.witnesses.push_back(w.to_table(r));

  // Irredundant facets: those whose tight rays span a hyperplane of the
  // cone's linear hull, counted once per distinct tight set.
  const std::size_t dim = detail::rank_of(rays, n);
  std::set<std::vector<bool>> seen;
  for (const auto& a : all_facets) {
    std::vector<bool> tight(rays.size());
    std::vector<RatVec> tight_rays;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      tight[r] = dot(a, rays[r]).is_zero();
      if (tight[r]) tight_rays.push_back(rays[r]);
    }
    if (tight_rays.size() == rays.size()) continue;  // implicit equality
    if (dim == 0 || detail::rank_of(tight_rays, n) != dim - 1) continue;
    seen.insert(tight);
  }
  rep.n_facets = seen.size();

  rep.equal = rep.witnesses.empty() && rep.uncovered.empty();
  return rep;
}

}  // namespace bcone::verify
