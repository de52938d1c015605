#pragma once

#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bcone/betti_table.hpp"
#include "bcone/resolve/bpoly.hpp"

namespace bcone::io {

using resolve::ParseError;

namespace detail {

inline std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline int parse_int(const std::string& s, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": bad integer '" + s + "'");
  }
}

}  // namespace detail

/// Canonical text form:
///
///   betti v1
///   mode canonical|explicit
///   entry <i> <j> <a>[/<b>]
///
/// Entries are sorted by (i, j); rationals are in lowest terms.
inline std::string print_table(const BettiTable& t) {
  std::string out = "betti v1\nmode ";
  out += t.mode() == TailMode::Canonical ? "canonical" : "explicit";
  out += '\n';
  for (const auto& [k, v] : t.entries())
    out += "entry " + std::to_string(k.first) + " " + std::to_string(k.second) + " " +
           v.to_string() + "\n";
  return out;
}

/// Reads a table file. Blank lines, lines starting with '#' and
/// `key: value` metadata lines are skipped. Duplicate (i,j) entries and
/// rows i >= 3 in canonical mode are errors; zero entries are dropped.
inline BettiTable parse_table(std::istream& in) {
  std::optional<BettiTable> table;
  bool seen_header = false;
  std::set<std::pair<int, int>> seen;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto words = detail::split_words(line);
    if (words.empty() || words[0][0] == '#') continue;
    if (words[0].back() == ':') continue;
    const auto where = "line " + std::to_string(line_no) + ": ";
    if (!seen_header) {
      if (words.size() != 2 || words[0] != "betti" || words[1] != "v1")
        throw ParseError(where + "expected header 'betti v1'");
      seen_header = true;
      continue;
    }
    if (words[0] == "mode") {
      if (table) throw ParseError(where + "duplicate mode line");
      if (words.size() != 2) throw ParseError(where + "expected 'mode canonical|explicit'");
      if (words[1] == "canonical")
        table.emplace(TailMode::Canonical);
      else if (words[1] == "explicit")
        table.emplace(TailMode::Explicit);
      else
        throw ParseError(where + "unknown mode '" + words[1] + "'");
      continue;
    }
    if (words[0] == "entry") {
      if (!table) throw ParseError(where + "entry before mode line");
      if (words.size() != 4) throw ParseError(where + "expected 'entry <i> <j> <value>'");
      const int i = detail::parse_int(words[1], line_no);
      const int j = detail::parse_int(words[2], line_no);
      if (i < 0) throw ParseError(where + "homological index must be >= 0");
      if (table->mode() == TailMode::Canonical && i >= 3)
        throw ParseError(where + "canonical tables store rows 0..2 only");
      if (!seen.insert({i, j}).second)
        throw ParseError(where + "duplicate entry (" + words[1] + "," + words[2] + ")");
      Rational v;
      try {
        v = Rational::parse(words[3]);
      } catch (const std::exception& e) {
        throw ParseError(where + e.what());
      }
      table->set(i, j, v);
      continue;
    }
    throw ParseError(where + "unknown directive '" + words[0] + "'");
  }
  if (!seen_header) throw ParseError("missing header 'betti v1'");
  if (!table) throw ParseError("missing mode line");
  return *table;
}

inline BettiTable parse_table(const std::string& text) {
  std::istringstream in(text);
  return parse_table(in);
}

}  // namespace bcone::io
