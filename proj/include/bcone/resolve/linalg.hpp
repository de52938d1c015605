#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace bcone::resolve {

/// Dense row-major vectors and matrices over a field policy F.
template <class F>
using Vec = std::vector<typename F::value_type>;

template <class F>
using Rows = std::vector<Vec<F>>;

/// Reduced row echelon form of a list of row vectors, zero rows dropped.
template <class F>
struct Echelon {
  Rows<F> rows;                      // rows[r] has 1 at pivots[r], 0 at other pivots
  std::vector<std::size_t> pivots;   // strictly increasing
  std::size_t width = 0;

  std::size_t rank() const { return rows.size(); }

  std::vector<bool> pivot_mask() const {
    std::vector<bool> mask(width, false);
    for (auto p : pivots) mask[p] = true;
    return mask;
  }

  /// Subtracts the row space from w so that w vanishes on every pivot.
  void reduce(const F& f, Vec<F>& w) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto c = w[pivots[r]];
      if (f.is_zero(c)) continue;
      for (std::size_t k = 0; k < width; ++k)
        if (!f.is_zero(rows[r][k])) w[k] = f.sub(w[k], f.mul(c, rows[r][k]));
    }
  }

  /// Coordinates of w (assumed in the row space) w.r.t. rows.
  Vec<F> coordinates(const Vec<F>& w) const {
    Vec<F> out;
    out.reserve(rows.size());
    for (auto p : pivots) out.push_back(w[p]);
    return out;
  }
};

template <class F>
Echelon<F> rref(const F& f, Rows<F> m, std::size_t width) {
  Echelon<F> e;
  e.width = width;
  std::size_t top = 0;
  for (std::size_t col = 0; col < width && top < m.size(); ++col) {
    std::size_t piv = top;
    while (piv < m.size() && f.is_zero(m[piv][col])) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[top], m[piv]);
    const auto inv = f.inv(m[top][col]);
    for (auto& x : m[top]) x = f.mul(x, inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == top) continue;
      const auto c = m[r][col];
      if (f.is_zero(c)) continue;
      for (std::size_t k = col; k < width; ++k)
        m[r][k] = f.sub(m[r][k], f.mul(c, m[top][k]));
    }
    e.pivots.push_back(col);
    ++top;
  }
  m.resize(top);
  e.rows = std::move(m);
  return e;
}

/// Basis (in RREF) of {w : w * A = 0} where A has one row per coordinate
/// of w, i.e. the left kernel of the map given by the rows `images`.
template <class F>
Echelon<F> left_kernel(const F& f, const Rows<F>& images,
                       std::size_t target_dim) {
  const std::size_t n = images.size();
  // Augment [A | I] and eliminate on the A block; rows whose A block
  // vanishes carry kernel vectors in the I block.
  Rows<F> aug(n, Vec<F>(target_dim + n, f.zero()));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < target_dim; ++c) aug[r][c] = images[r][c];
    aug[r][target_dim + r] = f.one();
  }
  std::size_t top = 0;
  for (std::size_t col = 0; col < target_dim && top < n; ++col) {
    std::size_t piv = top;
    while (piv < n && f.is_zero(aug[piv][col])) ++piv;
    if (piv == n) continue;
    std::swap(aug[top], aug[piv]);
    const auto inv = f.inv(aug[top][col]);
    for (auto& x : aug[top]) x = f.mul(x, inv);
    for (std::size_t r = top + 1; r < n; ++r) {
      const auto c = aug[r][col];
      if (f.is_zero(c)) continue;
      for (std::size_t k = col; k < target_dim + n; ++k)
        aug[r][k] = f.sub(aug[r][k], f.mul(c, aug[top][k]));
    }
    ++top;
  }
  Rows<F> kernel;
  for (std::size_t r = top; r < n; ++r)
    kernel.emplace_back(aug[r].begin() + static_cast<std::ptrdiff_t>(target_dim),
                        aug[r].end());
  return rref(f, std::move(kernel), n);
}

}  // namespace bcone::resolve
