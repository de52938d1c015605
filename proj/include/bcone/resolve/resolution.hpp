#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bcone/betti_table.hpp"
#include "bcone/resolve/bpoly.hpp"
#include "bcone/resolve/field.hpp"
#include "bcone/resolve/linalg.hpp"
#include "bcone/resolve/module.hpp"

namespace bcone::resolve {

inline constexpr std::array<Var, 3> variables = {Var::X, Var::Y, Var::Z};

/// Basis of the graded pieces of a free module sum_g B(-deg[g]).
/// In degree e the basis is (g, m) for every generator g with deg[g] <= e
/// and every standard monomial m of degree e - deg[g], ordered by g first.
class FreeLayout {
 public:
  explicit FreeLayout(std::vector<int> degrees) : deg_(std::move(degrees)) {}

  const std::vector<int>& degrees() const { return deg_; }
  std::size_t rank() const { return deg_.size(); }

  std::vector<std::pair<std::size_t, Monomial>> basis(int e) const {
    std::vector<std::pair<std::size_t, Monomial>> out;
    for (std::size_t g = 0; g < deg_.size(); ++g)
      for (const auto& m : monomial_basis(e - deg_[g])) out.emplace_back(g, m);
    return out;
  }

  std::size_t dim(int e) const {
    std::size_t n = 0;
    for (int d : deg_) n += d == e ? 1 : d < e ? 3 : 0;
    return n;
  }

  /// Position of (g, m) in basis(deg[g] + m.degree()).
  std::size_t index(std::size_t g, const Monomial& m) const {
    const int e = deg_[g] + m.degree();
    std::size_t pos = 0;
    for (std::size_t h = 0; h < g; ++h) pos += deg_[h] == e ? 1 : deg_[h] < e ? 3 : 0;
    if (m.var == Var::None) return pos;
    return pos + static_cast<std::size_t>(m.var) - 1;
  }

 private:
  std::vector<int> deg_;
};

/// A graded module known in degrees [lo, hi] through its pieces and the
/// multiplication maps x, y, z : N_e -> N_{e+1} (for e < hi).
template <class F>
struct GradedPieces {
  int lo = 0;
  int hi = -1;
  std::vector<std::size_t> dims;
  // act[v][e - lo][b]: image of basis vector b of N_e under variable v
  std::array<std::vector<Rows<F>>, 3> act;

  std::size_t dim(int e) const {
    return e < lo || e > hi ? 0 : dims[static_cast<std::size_t>(e - lo)];
  }
  const Rows<F>& action(std::size_t v, int e) const {
    return act[v][static_cast<std::size_t>(e - lo)];
  }
};

namespace detail {

template <class F>
Vec<F> apply(const F& f, const Rows<F>& images, const Vec<F>& w,
             std::size_t target_dim) {
  Vec<F> out(target_dim, f.zero());
  for (std::size_t b = 0; b < w.size(); ++b) {
    if (f.is_zero(w[b])) continue;
    for (std::size_t k = 0; k < target_dim; ++k)
      out[k] = f.add(out[k], f.mul(w[b], images[b][k]));
  }
  return out;
}

/// x, y or z times a vector of the free module, degree e -> e+1.
template <class F>
Vec<F> multiply_free(const F& f, const FreeLayout& layout, int e,
                     const Vec<F>& w, Var v) {
  const auto basis = layout.basis(e);
  Vec<F> out(layout.dim(e + 1), f.zero());
  const Monomial var = Monomial::power(v, 1);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (f.is_zero(w[k])) continue;
    const auto& [g, m] = basis[k];
    if (auto prod = m.times(var)) {
      auto& slot = out[layout.index(g, *prod)];
      slot = f.add(slot, w[k]);
    }
  }
  return out;
}

}  // namespace detail

/// Graded pieces of coker(presentation) in degrees [min gen degree, hi].
template <class F>
GradedPieces<F> presentation_pieces(const F& f, const GradedModuleB& m, int hi) {
  m.validate();
  const FreeLayout layout(m.gen_degrees);
  GradedPieces<F> out;
  out.lo = m.min_gen_degree();
  out.hi = hi;
  if (hi < out.lo) return out;

  std::vector<std::optional<int>> col_deg(m.relation_count());
  for (std::size_t c = 0; c < col_deg.size(); ++c) col_deg[c] = m.relation_degree(c);

  std::vector<Echelon<F>> rel;      // relation span per degree
  std::vector<std::vector<std::size_t>> free_cols;  // non-pivot columns
  for (int e = out.lo; e <= hi; ++e) {
    const std::size_t n = layout.dim(e);
    Rows<F> rows;
    for (std::size_t c = 0; c < col_deg.size(); ++c) {
      if (!col_deg[c] || *col_deg[c] > e) continue;
      for (const auto& mu : monomial_basis(e - *col_deg[c])) {
        Vec<F> row(n, f.zero());
        for (std::size_t g = 0; g < m.rows.size(); ++g)
          for (const auto& [mono, coef] : m.rows[g][c].terms())
            if (auto prod = mu.times(mono)) {
              auto& slot = row[layout.index(g, *prod)];
              slot = f.add(slot, f.from_rational(coef));
            }
        rows.push_back(std::move(row));
      }
    }
    rel.push_back(rref(f, std::move(rows), n));
    const auto mask = rel.back().pivot_mask();
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < n; ++k)
      if (!mask[k]) cols.push_back(k);
    out.dims.push_back(cols.size());
    free_cols.push_back(std::move(cols));
  }

  for (std::size_t v = 0; v < 3; ++v) {
    for (int e = out.lo; e < hi; ++e) {
      const auto idx = static_cast<std::size_t>(e - out.lo);
      const auto basis = layout.basis(e);
      Rows<F> images;
      for (std::size_t col : free_cols[idx]) {
        Vec<F> unit(basis.size(), f.zero());
        unit[col] = f.one();
        Vec<F> w = detail::multiply_free(f, layout, e, unit, variables[v]);
        rel[idx + 1].reduce(f, w);
        Vec<F> coords;
        for (std::size_t k : free_cols[idx + 1]) coords.push_back(w[k]);
        images.push_back(std::move(coords));
      }
      out.act[v].push_back(std::move(images));
    }
  }
  return out;
}

/// Minimal generators of N, degree by degree: a complement of
/// x N_{e-1} + y N_{e-1} + z N_{e-1} inside N_e.
template <class F>
std::vector<std::pair<int, Vec<F>>> minimal_generators(const F& f,
                                                       const GradedPieces<F>& n) {
  std::vector<std::pair<int, Vec<F>>> gens;
  for (int e = n.lo; e <= n.hi; ++e) {
    const std::size_t d = n.dim(e);
    if (d == 0) continue;
    Rows<F> image;
    if (e > n.lo)
      for (std::size_t v = 0; v < 3; ++v)
        for (const auto& row : n.action(v, e - 1)) image.push_back(row);
    const auto mask = rref(f, std::move(image), d).pivot_mask();
    for (std::size_t k = 0; k < d; ++k) {
      if (mask[k]) continue;
      Vec<F> unit(d, f.zero());
      unit[k] = f.one();
      gens.emplace_back(e, std::move(unit));
    }
  }
  return gens;
}

/// Kernel of the free cover on the given generators, as graded pieces.
template <class F>
GradedPieces<F> syzygy_pieces(const F& f, const GradedPieces<F>& n,
                              const std::vector<std::pair<int, Vec<F>>>& gens) {
  std::vector<int> degs;
  for (const auto& g : gens) degs.push_back(g.first);
  const FreeLayout layout(degs);

  GradedPieces<F> out;
  if (gens.empty()) return out;
  out.lo = *std::min_element(degs.begin(), degs.end());
  out.hi = n.hi;

  // chain[g][v] = image of g * v^a in N_{deg g + a} for the current a
  std::vector<std::array<Vec<F>, 3>> chain(gens.size());
  std::vector<Echelon<F>> kernels;
  for (int e = out.lo; e <= out.hi; ++e) {
    const std::size_t target = n.dim(e);
    Rows<F> images;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const int dg = gens[g].first;
      if (dg > e) continue;
      if (dg == e) {
        images.push_back(gens[g].second);
        for (auto& c : chain[g]) c = gens[g].second;
        continue;
      }
      for (std::size_t v = 0; v < 3; ++v) {
        chain[g][v] = detail::apply(f, n.action(v, e - 1), chain[g][v], target);
        images.push_back(chain[g][v]);
      }
    }
    kernels.push_back(left_kernel(f, images, target));
    out.dims.push_back(kernels.back().rank());
  }

  for (std::size_t v = 0; v < 3; ++v) {
    for (int e = out.lo; e < out.hi; ++e) {
      const auto idx = static_cast<std::size_t>(e - out.lo);
      Rows<F> images;
      for (const auto& w : kernels[idx].rows) {
        Vec<F> prod = detail::multiply_free(f, layout, e, w, variables[v]);
        Vec<F> coords = kernels[idx + 1].coordinates(prod);
        Vec<F> check = prod;
        kernels[idx + 1].reduce(f, check);
        for (const auto& c : check)
          if (!f.is_zero(c))
            throw std::logic_error("syzygy module is not closed under multiplication");
        images.push_back(std::move(coords));
      }
      out.act[v].push_back(std::move(images));
    }
  }
  return out;
}

struct ResolutionResult {
  BettiTable betti{TailMode::Explicit};
  int deg_bound = 0;
  int hom_bound = 0;
  /// 2 beta_{i,j} = beta_{i+1,j+1} for 2 <= i < hom_bound inside the window
  bool tail_consistent = true;
  /// deg_bound is large enough that no nonzero beta_{i,j}, i <= hom_bound,
  /// lies outside the reported window
  bool complete = true;
  /// largest internal degree reported (entries with j > this are withheld)
  int certified_max_degree = 0;
};

template <class F>
ResolutionResult resolve_over(const F& f, const GradedModuleB& m, int deg_bound,
                              int hom_bound) {
  if (hom_bound < 2) throw std::invalid_argument("hom_bound must be at least 2");

  ResolutionResult out;
  out.deg_bound = deg_bound;
  out.hom_bound = hom_bound;
  out.certified_max_degree = deg_bound - 1;
  // Minimal syzygies of the module sit in degrees <= the presentation's top
  // degree R, and every later differential is linear, so row i lives in
  // degrees <= R + i - 1.
  out.complete = deg_bound >= m.max_presentation_degree() + hom_bound;

  GradedPieces<F> n = presentation_pieces(f, m, deg_bound);
  for (int i = 0; i <= hom_bound; ++i) {
    const auto gens = minimal_generators(f, n);
    for (const auto& [e, vec] : gens)
      if (e <= out.certified_max_degree) out.betti.add(i, e, 1);
    if (i == hom_bound || gens.empty()) break;
    n = syzygy_pieces(f, n, gens);
  }

  if (const auto range = out.betti.degree_range())
    for (int i = 2; i < hom_bound; ++i)
      for (int j = range->first - 1; j + 1 <= out.certified_max_degree; ++j)
        if (Rational(2) * out.betti.stored(i, j) != out.betti.stored(i + 1, j + 1))
          out.tail_consistent = false;
  return out;
}

/// Minimal free resolution up to homological degree hom_bound, computed
/// from the graded pieces in degrees <= deg_bound. Betti numbers are
/// reported for internal degrees j <= deg_bound - 1.
inline ResolutionResult min_free_resolution(const GradedModuleB& m, int deg_bound,
                                            int hom_bound) {
  if (m.field.kind == FieldSpec::Kind::Rationals)
    return resolve_over(RationalField{}, m, deg_bound, hom_bound);
  return resolve_over(PrimeField{m.field.characteristic}, m, deg_bound, hom_bound);
}

}  // namespace bcone::resolve
