#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "bcone/cone.hpp"
#include "bcone/io/module_file.hpp"
#include "bcone/io/table_file.hpp"
#include "bcone/local_cone.hpp"
#include "bcone/resolve/hilbert.hpp"
#include "bcone/resolve/resolution.hpp"
#include "bcone/verify/cross_check.hpp"

namespace bcone::cli {

/// 0: success / member / equal; 1: not a member, verification failed or
/// incomplete result; 2: usage or format error.
enum Exit : int { Ok = 0, Negative = 1, Usage = 2 };

/// Parses `qq` or `fp:<p>`.
inline resolve::FieldSpec parse_field_flag(const std::string& s) {
  if (s == "qq" || s == "QQ") return resolve::FieldSpec::rationals();
  if (s.rfind("fp:", 0) == 0) {
    const auto p = std::stoul(s.substr(3));
    return resolve::FieldSpec::prime(static_cast<std::uint32_t>(p));
  }
  throw std::invalid_argument("field must be 'qq' or 'fp:<p>' (got '" + s + "')");
}

inline void print_decomposition(std::ostream& out, const Decomposition& d) {
  for (const auto& t : d.terms)
    out << "term " << t.degrees.to_string() << " " << t.coefficient << "\n";
}

inline int cmd_rays(int d0, const std::string& d1, bool tail, std::ostream& out,
                    std::ostream& err) {
  try {
    std::optional<DegreeSequence> d;
    if (d1 == "inf") {
      if (tail) throw std::invalid_argument("--tail needs a finite d1");
      d = DegreeSequence::free_module(d0);
    } else {
      const int e = io::detail::parse_int(d1, 0);
      d = tail ? DegreeSequence::tail(d0, e) : DegreeSequence::two_step(d0, e);
    }
    out << io::print_table(make_pure_diagram(*d).table);
    return Ok;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  }
}

/// `check` and `decompose`; the latter prints only the decomposition.
inline int cmd_check(std::istream& in, bool finite_length, bool decomposition_only,
                     std::ostream& out, std::ostream& err) {
  BettiTable t;
  try {
    t = io::parse_table(in);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  }
  const auto verdict = finite_length ? check_finite_length(t) : check_graded(t);
  if (!verdict.member) {
    const auto& v = verdict.violation();
    out << "member: no\n"
        << "violated: " << v.functional.to_string() << " value: " << v.value << "\n";
    return Negative;
  }
  if (!decomposition_only) out << "member: yes\n";
  print_decomposition(out, verdict.decomposition());
  return Ok;
}

inline resolve::GradedModuleB read_module(std::istream& in,
                                          const std::optional<std::string>& field) {
  auto file = io::parse_module(in);
  if (field) {
    const auto spec = parse_field_flag(*field);
    file.module.field = spec;
  }
  return file.module;
}

inline int cmd_resolve(std::istream& in, int deg_bound, int hom_bound,
                       const std::optional<std::string>& field, std::ostream& out,
                       std::ostream& err) {
  resolve::GradedModuleB m;
  try {
    m = read_module(in, field);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  }
  try {
    const auto res = resolve::min_free_resolution(m, deg_bound, hom_bound);
    out << io::print_table(res.betti);
    out << "field: " << m.field.to_string() << "\n"
        << "deg_bound: " << deg_bound << "\n"
        << "hom_bound: " << hom_bound << "\n"
        << "status: " << (res.complete ? "complete" : "partial") << "\n"
        << "tail_consistent: " << (res.tail_consistent ? "yes" : "no") << "\n";
    try {
      out << "e: " << resolve::hilbert_data(m, deg_bound).multiplicity << "\n";
    } catch (const resolve::NotStabilized&) {
      out << "e: unknown\n";
    }
    out << "gamma_inf: " << eval_functional(Functional::gamma_inf(), res.betti) << "\n";
    if (!res.complete) {
      err << "warning: deg_bound " << deg_bound << " is below presentation degree "
          << m.max_presentation_degree() << " + hom_bound " << hom_bound
          << "; table may be partial\n";
      return Negative;
    }
    return Ok;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Negative;
  }
}

inline int cmd_hilbert(std::istream& in, int deg_bound,
                       const std::optional<std::string>& field, std::ostream& out,
                       std::ostream& err) {
  resolve::GradedModuleB m;
  try {
    m = read_module(in, field);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  }
  try {
    const auto h = resolve::hilbert_data(m, deg_bound);
    out << "lowest_degree: " << h.lo << "\ndims:";
    for (auto d : h.dims) out << " " << d;
    out << "\nnumerator: " << h.numerator_string() << "\n"
        << "e: " << h.multiplicity << "\n";
    return Ok;
  } catch (const resolve::NotStabilized& e) {
    err << "error: " << e.what() << "\n";
    return Negative;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  }
}

inline int cmd_verify_window(int jmin, int jmax, bool finite_length, bool drop_alpha,
                             bool drop_gamma, std::size_t max_width, std::ostream& out,
                             std::ostream& err) {
  try {
    const verify::Window w(jmin, jmax);
    verify::CrossCheckOptions opt;
    opt.finite_length = finite_length;
    opt.families.alpha = !drop_alpha;
    opt.families.gamma = !drop_gamma;
    opt.max_width = max_width;
    const auto rep = verify::cross_check(w, opt);
    out << "window: " << w.to_string() << "\n"
        << "finite_length: " << (finite_length ? "yes" : "no") << "\n"
        << "generators: " << rep.n_generators << "\n"
        << "rays: " << rep.n_rays << "\n"
        << "facets: " << rep.n_facets << "\n"
        << "equal: " << (rep.equal ? "yes" : "no") << "\n";
    for (const auto& t : rep.witnesses) {
      out << "witness:";
      for (const auto& [k, v] : t.entries())
        out << " entry(" << k.first << "," << k.second << ")=" << v;
      out << " gamma_inf=" << eval_functional(Functional::gamma_inf(), t) << "\n";
    }
    for (const auto& u : rep.uncovered)
      out << "uncovered: " << u.degrees.to_string() << " " << u.functional.to_string()
          << " value: " << u.value << "\n";
    return rep.equal ? Ok : Negative;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  }
}

inline int cmd_local(const std::string& mode, const std::string& b0,
                     const std::string& b1, const std::string& b2, bool finite_length,
                     std::ostream& out, std::ostream& err) {
  BettiSequence s;
  try {
    if (mode != "check" && mode != "decompose")
      throw std::invalid_argument("mode must be 'check' or 'decompose'");
    s = {Rational::parse(b0), Rational::parse(b1), Rational::parse(b2)};
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  }
  const auto verdict = check_local(s, finite_length);
  if (!verdict.member) {
    out << "member: no\n"
        << "violated: " << to_string(verdict.violation->functional)
        << " value: " << verdict.violation->value << "\n";
    return Negative;
  }
  if (mode == "check") {
    out << "member: yes\n";
    return Ok;
  }
  const auto d = decompose_local(s, finite_length);
  if (!finite_length) out << "a: " << d.a << "\n";
  out << "b: " << d.b << "\n"
      << "c: " << d.c << "\n";
  return Ok;
}

}  // namespace bcone::cli
