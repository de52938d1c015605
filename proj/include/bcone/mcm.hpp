#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bcone {

/// The eight indecomposable maximal Cohen-Macaulay B-modules.
/// M1 = B/(x), M2 = B/(y), M3 = B/(z); M12 = B/(x,y) and so on.
enum class MCM { B, Omega, M1, M2, M3, M12, M13, M23 };

inline constexpr std::array<MCM, 8> all_mcm = {
    MCM::B, MCM::Omega, MCM::M1, MCM::M2, MCM::M3, MCM::M12, MCM::M13,
    MCM::M23};

inline std::string to_string(MCM m) {
  switch (m) {
    case MCM::B: return "B";
    case MCM::Omega: return "omega";
    case MCM::M1: return "M1";
    case MCM::M2: return "M2";
    case MCM::M3: return "M3";
    case MCM::M12: return "M12";
    case MCM::M13: return "M13";
    case MCM::M23: return "M23";
  }
  return {};
}

inline MCM mcm_from_string(std::string_view s) {
  for (MCM m : all_mcm)
    if (to_string(m) == s) return m;
  throw std::invalid_argument("unknown MCM module '" + std::string(s) + "'");
}

namespace detail {

inline MCM pair_module(int a, int b) {
  if (a > b) std::swap(a, b);
  if (a == 1 && b == 2) return MCM::M12;
  if (a == 1 && b == 3) return MCM::M13;
  if (a == 2 && b == 3) return MCM::M23;
  throw std::invalid_argument("bad index pair");
}

}  // namespace detail

/// Shifted summand N(shift) of a syzygy module.
struct ShiftedMCM {
  MCM module;
  int shift;
  friend bool operator==(const ShiftedMCM&, const ShiftedMCM&) = default;
};

/// Omega(N) for an indecomposable N, as a list of summands. Every summand
/// is shifted by -1, i.e. generated in degree 1.
inline std::vector<ShiftedMCM> syzygy_of_indecomposable(MCM n) {
  switch (n) {
    case MCM::B:
      return {};
    case MCM::Omega:
      return {{MCM::M12, -1}, {MCM::M23, -1}, {MCM::M13, -1}};
    case MCM::M1:
      return {{MCM::M23, -1}};
    case MCM::M2:
      return {{MCM::M13, -1}};
    case MCM::M3:
      return {{MCM::M12, -1}};
    case MCM::M12:
    case MCM::M13:
    case MCM::M23: {
      const int i = n == MCM::M23 ? 2 : 1;
      const int j = n == MCM::M12 ? 2 : 3;
      const int k = 6 - i - j;
      return {{detail::pair_module(j, k), -1}, {detail::pair_module(i, k), -1}};
    }
  }
  throw std::invalid_argument("unknown MCM module");
}

}  // namespace bcone
