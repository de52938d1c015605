#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bcone/io/table_file.hpp"
#include "bcone/resolve/module.hpp"

namespace bcone::io {

/// Parsed module description plus whether the file fixed the field.
struct ModuleFile {
  resolve::GradedModuleB module;
  bool field_given = false;
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

}  // namespace detail

/// Line-oriented module description:
///
///   field QQ | field Fp <p>
///   gens <d1> <d2> ...            generator degrees (default: all 0)
///   rel <poly>, <poly>, ...       one line per generator (matrix row);
///                                 entry c is that generator's coefficient
///                                 in relation c
///   builtin <name>                complete alternative to gens/rel
///
/// `#` starts a comment line.
inline ModuleFile parse_module(std::istream& in) {
  ModuleFile out;
  std::optional<std::vector<int>> gens;
  std::vector<std::vector<resolve::BPolynomial>> rows;
  std::optional<std::string> builtin_name;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    const std::string body = detail::trim(line);
    if (body.empty() || body[0] == '#') continue;
    const auto where = "line " + std::to_string(line_no) + ": ";
    const auto space = body.find_first_of(" \t");
    const std::string key = body.substr(0, space);
    const std::string rest =
        space == std::string::npos ? std::string() : detail::trim(body.substr(space));
    try {
      if (key == "field") {
        const auto words = detail::split_words(rest);
        if (words.size() == 1 && words[0] == "QQ")
          out.module.field = resolve::FieldSpec::rationals();
        else if (words.size() == 2 && words[0] == "Fp")
          out.module.field = resolve::FieldSpec::prime(
              static_cast<std::uint32_t>(detail::parse_int(words[1], line_no)));
        else
          throw ParseError("expected 'field QQ' or 'field Fp <p>'");
        out.field_given = true;
      } else if (key == "gens") {
        if (gens) throw ParseError("duplicate gens line");
        gens.emplace();
        for (const auto& w : detail::split_words(rest))
          gens->push_back(detail::parse_int(w, line_no));
      } else if (key == "rel") {
        if (rest.empty()) throw ParseError("empty rel line");
        std::vector<resolve::BPolynomial> row;
        for (const auto& item : detail::split_commas(rest))
          row.push_back(resolve::parse_bpoly(item));
        rows.push_back(std::move(row));
      } else if (key == "builtin") {
        if (builtin_name) throw ParseError("duplicate builtin line");
        builtin_name = rest;
      } else {
        throw ParseError("unknown directive '" + key + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + e.what());
    }
  }

  const auto field = out.module.field;
  if (builtin_name) {
    if (gens || !rows.empty())
      throw ParseError("builtin cannot be combined with gens or rel");
    try {
      out.module = resolve::builtin(*builtin_name, field);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    return out;
  }
  if (!gens) gens = std::vector<int>(rows.empty() ? 1 : rows.size(), 0);
  if (rows.empty()) rows.assign(gens->size(), {});
  if (rows.size() != gens->size())
    throw ParseError("need one rel line per generator (" + std::to_string(gens->size()) +
                     " generators, " + std::to_string(rows.size()) + " rel lines)");
  out.module.gen_degrees = *gens;
  out.module.rows = std::move(rows);
  try {
    out.module.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return out;
}

inline ModuleFile parse_module(const std::string& text) {
  std::istringstream in(text);
  return parse_module(in);
}

}  // namespace bcone::io
