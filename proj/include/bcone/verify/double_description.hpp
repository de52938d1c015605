#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "bcone/rational.hpp"

namespace bcone::verify {

using RatVec = std::vector<Rational>;

inline Rational dot(const RatVec& a, const RatVec& b) {
  Rational s;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero() && !b[k].is_zero()) s += a[k] * b[k];
  return s;
}

/// Scales a nonzero vector to the primitive integer vector on its ray.
inline RatVec primitive(const RatVec& v) {
  std::int64_t l = 1;
  for (const auto& x : v) l = std::lcm(l, x.den());
  std::int64_t g = 0;
  RatVec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    out[k] = v[k] * Rational(l);
    g = std::gcd(g, out[k].num());
  }
  if (g > 1)
    for (auto& x : out) x /= Rational(g);
  return out;
}

/// Extreme rays of the pointed cone {x in R^n : x >= 0, a.x >= 0 for each a}.
///
/// Double description: start from the orthant (rays e_1..e_n) and insert
/// one halfspace at a time. Rays on the positive side and on the
/// hyperplane survive; each adjacent (positive, negative) pair contributes
/// the combination lying on the hyperplane. Adjacency is the combinatorial
/// test: no third ray is tight on every constraint tight at both.
/// Rays are returned as primitive integer vectors.
inline std::vector<RatVec> extreme_rays(std::size_t n,
                                        const std::vector<RatVec>& halfspaces) {
  struct Ray {
    RatVec v;
    std::vector<bool> tight;  // over the constraints inserted so far
  };
  const std::size_t total = n + halfspaces.size();
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < n; ++k) {
    Ray r{RatVec(n, Rational(0)), std::vector<bool>(total, false)};
    r.v[k] = 1;
    for (std::size_t c = 0; c < n; ++c) r.tight[c] = c != k;
    rays.push_back(std::move(r));
  }

  for (std::size_t h = 0; h < halfspaces.size(); ++h) {
    const std::size_t slot = n + h;
    const auto& a = halfspaces[h];
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(a, rays[r].v);
      if (val[r].sign() > 0) pos.push_back(r);
      if (val[r].sign() < 0) neg.push_back(r);
    }
    if (neg.empty()) {
      for (std::size_t r = 0; r < rays.size(); ++r) rays[r].tight[slot] = val[r].is_zero();
      continue;
    }

    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (val[r].sign() < 0) continue;
      Ray keep = rays[r];
      keep.tight[slot] = val[r].is_zero();
      next.push_back(std::move(keep));
    }
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        std::vector<bool> common(total, false);
        for (std::size_t c = 0; c < slot; ++c)
          common[c] = rays[p].tight[c] && rays[q].tight[c];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          bool covers = true;
          for (std::size_t c = 0; c < slot && covers; ++c)
            if (common[c] && !rays[r].tight[c]) covers = false;
          if (covers) adjacent = false;
        }
        if (!adjacent) continue;
        RatVec combo(n);
        const Rational vp = val[p], vq = -val[q];
        for (std::size_t k = 0; k < n; ++k)
          combo[k] = vp * rays[q].v[k] + vq * rays[p].v[k];
        common[slot] = true;
        next.push_back({primitive(combo), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  std::vector<RatVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  return out;
}

}  // namespace bcone::verify
