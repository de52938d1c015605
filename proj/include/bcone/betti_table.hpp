#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "bcone/rational.hpp"

namespace bcone {

/// How rows i >= 3 of a table are represented.
///
/// Canonical tables store rows 0..2 only; row i >= 3 is read off the
/// doubling rule v(i,j) = 2^(i-2) v(2, j-(i-2)). Explicit tables store
/// every row literally, e.g. a truncated resolution read from a file.
enum class TailMode { Canonical, Explicit };

/// Sparse table (v_{i,j}) with i >= 0 and finitely many nonzero entries.
class BettiTable {
 public:
  using Key = std::pair<int, int>;
  using Entries = std::map<Key, Rational>;

  explicit BettiTable(TailMode mode = TailMode::Canonical) : mode_(mode) {}

  BettiTable(TailMode mode,
             std::initializer_list<std::pair<const Key, Rational>> init)
      : mode_(mode) {
    for (const auto& [k, v] : init) set(k.first, k.second, v);
  }

  TailMode mode() const { return mode_; }
  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  /// Stores v at (i,j); a zero value erases the entry.
  void set(int i, int j, const Rational& v) {
    check_row(i);
    if (v.is_zero())
      entries_.erase({i, j});
    else
      entries_[{i, j}] = v;
  }

  void add(int i, int j, const Rational& v) { set(i, j, stored(i, j) + v); }

  /// The literally stored value (zero when absent).
  Rational stored(int i, int j) const {
    const auto it = entries_.find({i, j});
    return it == entries_.end() ? Rational(0) : it->second;
  }

  /// The value of the table at (i,j); canonical tables extend rows >= 3
  /// by doubling row 2 along the diagonal.
  Rational at(int i, int j) const {
    if (i < 0) return Rational(0);
    if (mode_ == TailMode::Explicit || i <= 2) return stored(i, j);
    const int steps = i - 2;
    if (steps > 62) throw std::overflow_error("tail row index too large");
    return stored(2, j - steps) * Rational(std::int64_t{1} << steps);
  }

  /// Largest stored row index, or -1 for an empty table.
  int max_row() const {
    int r = -1;
    for (const auto& [k, v] : entries_) r = std::max(r, k.first);
    return r;
  }

  /// Min and max internal degree over stored entries in rows [row_lo, row_hi].
  std::optional<std::pair<int, int>> degree_range(int row_lo = 0,
                                                  int row_hi = 1 << 20) const {
    std::optional<std::pair<int, int>> out;
    for (const auto& [k, v] : entries_) {
      if (k.first < row_lo || k.first > row_hi) continue;
      if (!out)
        out = std::pair{k.second, k.second};
      else {
        out->first = std::min(out->first, k.second);
        out->second = std::max(out->second, k.second);
      }
    }
    return out;
  }

  /// Lowest degree with a nonzero entry in row i.
  std::optional<int> row_min(int i) const {
    auto r = degree_range(i, i);
    if (!r) return std::nullopt;
    return r->first;
  }

  /// Sum of the stored entries of row i.
  Rational row_total(int i) const {
    Rational s;
    for (const auto& [k, v] : entries_)
      if (k.first == i) s += v;
    return s;
  }

  /// Rows 0..2 only, in canonical mode. For explicit tables this drops the
  /// literal tail; whether it obeyed the doubling rule is a separate check.
  BettiTable canonical() const {
    BettiTable out(TailMode::Canonical);
    for (const auto& [k, v] : entries_)
      if (k.first <= 2) out.entries_.emplace(k, v);
    return out;
  }

  /// Same values with rows 0..max_row stored literally.
  BettiTable to_explicit(int max_row) const {
    BettiTable out(TailMode::Explicit);
    if (mode_ == TailMode::Explicit) {
      for (const auto& [k, v] : entries_)
        if (k.first <= max_row) out.entries_.emplace(k, v);
      return out;
    }
    for (const auto& [k, v] : entries_) {
      if (k.first < 2) {
        out.entries_.emplace(k, v);
        continue;
      }
      for (int i = 2; i <= max_row; ++i)
        out.entries_.emplace(Key{i, k.second + i - 2}, at(i, k.second + i - 2));
    }
    return out;
  }

  BettiTable scaled(const Rational& a) const {
    BettiTable out(mode_);
    if (a.is_zero()) return out;
    for (const auto& [k, v] : entries_) out.entries_.emplace(k, v * a);
    return out;
  }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  void check_row(int i) const {
    if (i < 0) throw std::invalid_argument("homological index must be >= 0");
    if (mode_ == TailMode::Canonical && i >= 3)
      throw std::invalid_argument(
          "canonical tables store rows 0..2 only (row " + std::to_string(i) +
          ")");
  }

  Entries entries_;
  TailMode mode_;
};

/// a*u + b*v with zero entries pruned. Both tables must share a tail mode.
inline BettiTable table_arith(const Rational& a, const BettiTable& u,
                              const Rational& b, const BettiTable& v) {
  if (u.mode() != v.mode())
    throw std::invalid_argument("table_arith: mixed tail modes");
  BettiTable out(u.mode());
  for (const auto& [k, x] : u.entries()) out.add(k.first, k.second, a * x);
  for (const auto& [k, x] : v.entries()) out.add(k.first, k.second, b * x);
  return out;
}

}  // namespace bcone
