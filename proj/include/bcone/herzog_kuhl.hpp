#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "bcone/mcm.hpp"
#include "bcone/rational.hpp"

namespace bcone {

/// Betti sequence of a finite length module with a pure resolution whose
/// syzygy is a sum of copies of one indecomposable MCM module N, scaled to
/// its first lattice point. c = c(N) is the growth constant with
/// beta_i = 2^(i-2) c beta_1 for i >= 2.
struct HKRay {
  Rational c;
  MCM mcm;  // representative of the isomorphism class
  std::array<std::int64_t, 3> head{};

  /// beta_i with the doubling tail beta_i = 2 beta_{i-1} for i > 2.
  std::int64_t entry(std::size_t i) const {
    if (i < 3) return head[i];
    if (i - 2 > 61) throw std::overflow_error("HK ray entry too large");
    return head[2] << (i - 2);
  }

  std::vector<std::int64_t> prefix(std::size_t n) const {
    std::vector<std::int64_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = entry(i);
    return out;
  }
};

/// c must be one of 0, 1, 3/2, 2 (for B, M_i, omega_B, M_{i,j}).
inline HKRay hk_ray(const Rational& c) {
  MCM mcm;
  if (c == Rational(0))
    mcm = MCM::B;
  else if (c == Rational(1))
    mcm = MCM::M1;
  else if (c == Rational(3, 2))
    mcm = MCM::Omega;
  else if (c == Rational(2))
    mcm = MCM::M12;
  else
    throw std::invalid_argument("hk_ray: c must be one of 0, 1, 3/2, 2 (got " +
                                c.to_string() + ")");

  // Rationality of the Hilbert series forces 3(b0 - b1) + c b1 = 0; with
  // b0 = 1 this gives (1, 3/(3-c), 3c/(3-c)). A free syzygy has no b2.
  std::array<Rational, 3> raw;
  raw[0] = 1;
  raw[1] = Rational(3) / (Rational(3) - c);
  raw[2] = c.is_zero() ? Rational(0) : Rational(3) * c / (Rational(3) - c);

  std::int64_t scale = 1;
  for (const auto& r : raw) scale = std::lcm(scale, r.den());
  HKRay out{c, mcm, {}};
  std::int64_t g = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    out.head[i] = (raw[i] * Rational(scale)).num();
    g = std::gcd(g, out.head[i]);
  }
  for (auto& h : out.head) h /= g;
  return out;
}

/// True when 2 v3 = v1 + v4 and 2 v2 = 3 v1 + v4 on the first `n` entries.
inline bool hk_relations_hold(const std::vector<std::int64_t>& v1,
                              const std::vector<std::int64_t>& v2,
                              const std::vector<std::int64_t>& v3,
                              const std::vector<std::int64_t>& v4,
                              std::size_t n = 8) {
  for (std::size_t i = 0; i < n; ++i) {
    const auto at = [i](const std::vector<std::int64_t>& v) {
      return i < v.size() ? v[i] : std::int64_t{0};
    };
    if (2 * at(v3) != at(v1) + at(v4)) return false;
    if (2 * at(v2) != 3 * at(v1) + at(v4)) return false;
  }
  return true;
}

inline bool hk_relations_check() {
  constexpr std::size_t n = 8;
  return hk_relations_hold(hk_ray(0).prefix(n), hk_ray(1).prefix(n),
                           hk_ray(Rational(3, 2)).prefix(n),
                           hk_ray(2).prefix(n), n);
}

}  // namespace bcone
