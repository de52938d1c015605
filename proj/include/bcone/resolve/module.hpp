#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bcone/resolve/bpoly.hpp"
#include "bcone/resolve/field.hpp"

namespace bcone::resolve {

/// Finitely presented graded B-module: the cokernel of a matrix whose
/// rows are indexed by generators (in degrees gen_degrees) and whose
/// columns are relations. Column c is the element sum_i rows[i][c] e_i of
/// the free module F = sum_i B(-gen_degrees[i]); it must be homogeneous.
struct GradedModuleB {
  std::vector<int> gen_degrees;
  std::vector<std::vector<BPolynomial>> rows;
  FieldSpec field = FieldSpec::default_field();

  std::size_t relation_count() const { return rows.empty() ? 0 : rows.front().size(); }

  /// Degree of relation column c in F, or nullopt for a zero column.
  std::optional<int> relation_degree(std::size_t c) const {
    std::optional<int> deg;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& p = rows[i][c];
      if (p.is_zero()) continue;
      const auto d = p.homogeneous_degree();
      if (!d)
        throw std::invalid_argument("relation column " + std::to_string(c) +
                                    " has an inhomogeneous entry " + p.to_string());
      const int total = *d + gen_degrees[i];
      if (deg && *deg != total)
        throw std::invalid_argument("relation column " + std::to_string(c) +
                                    " is not homogeneous");
      deg = total;
    }
    return deg;
  }

  /// Checks shape and homogeneity; throws std::invalid_argument.
  void validate() const {
    if (rows.size() != gen_degrees.size())
      throw std::invalid_argument("presentation needs one row per generator");
    for (const auto& r : rows)
      if (r.size() != relation_count())
        throw std::invalid_argument("relation rows have different lengths");
    for (std::size_t c = 0; c < relation_count(); ++c) relation_degree(c);
  }

  int min_gen_degree() const {
    return gen_degrees.empty() ? 0 : *std::min_element(gen_degrees.begin(), gen_degrees.end());
  }

  /// Largest degree among generators and nonzero relation columns.
  int max_presentation_degree() const {
    int d = gen_degrees.empty() ? 0 : *std::max_element(gen_degrees.begin(), gen_degrees.end());
    for (std::size_t c = 0; c < relation_count(); ++c)
      if (auto rd = relation_degree(c)) d = std::max(d, *rd);
    return d;
  }
};

/// B / I for homogeneous nonzero generators of I; one generator in degree 0.
inline GradedModuleB quotient_module(const std::vector<BPolynomial>& gens,
                                     FieldSpec field = FieldSpec::default_field()) {
  GradedModuleB m;
  m.gen_degrees = {0};
  m.rows.assign(1, {});
  m.field = field;
  for (const auto& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("quotient_module: zero generator");
    if (!g.homogeneous_degree())
      throw std::invalid_argument("quotient_module: inhomogeneous generator " +
                                  g.to_string());
    m.rows[0].push_back(g);
  }
  return m;
}

inline constexpr std::string_view builtin_names[] = {
    "B", "omega", "M1", "M2", "M3", "M12", "M13", "M23", "k_residue"};

/// Standard presentations of the eight indecomposable MCM modules and of
/// the residue field k = B/(x,y,z).
inline GradedModuleB builtin(std::string_view name,
                             FieldSpec field = FieldSpec::default_field()) {
  const auto x = BPolynomial::variable(Var::X);
  const auto y = BPolynomial::variable(Var::Y);
  const auto z = BPolynomial::variable(Var::Z);
  if (name == "B") return quotient_module({}, field);
  if (name == "M1") return quotient_module({x}, field);
  if (name == "M2") return quotient_module({y}, field);
  if (name == "M3") return quotient_module({z}, field);
  if (name == "M12") return quotient_module({x, y}, field);
  if (name == "M13") return quotient_module({x, z}, field);
  if (name == "M23") return quotient_module({y, z}, field);
  if (name == "k_residue") return quotient_module({x, y, z}, field);
  if (name == "omega") {
    // cokernel of [[-z, y, 0], [0, -y, x]] on two generators of degree 0
    GradedModuleB m;
    m.gen_degrees = {0, 0};
    m.rows = {{-z, y, BPolynomial()}, {BPolynomial(), -y, x}};
    m.field = field;
    return m;
  }
  throw std::invalid_argument("unknown builtin module '" + std::string(name) + "'");
}

}  // namespace bcone::resolve
