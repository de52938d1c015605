// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Every comparison is exact; the only tolerance is zero.

#include <array>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bcone/bcone.hpp"
#include "oracles.hpp"

using namespace bcone;
using namespace bcone::resolve;

namespace {

constexpr Rational kTolerance{0};  // exact arithmetic throughout

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

bool exact_equal(const Rational& a, const Rational& b) { return (a - b).abs() <= kTolerance; }

BettiTable diagonal(const std::vector<int>& ranks) {
  BettiTable t(TailMode::Explicit);
  for (std::size_t i = 0; i < ranks.size(); ++i)
    t.set(static_cast<int>(i), static_cast<int>(i), ranks[i]);
  return t;
}

// 1
Outcome witnesses(const FieldSpec& field) {
  Outcome o;
  const auto x = BPolynomial::variable(Var::X);
  const auto y = BPolynomial::variable(Var::Y);
  const auto z = BPolynomial::variable(Var::Z);
  for (int d1 = 1; d1 <= 4; ++d1) {
    const auto two =
        min_free_resolution(quotient_module({(x + y + z).pow(d1)}, field), d1 + 6, 4);
    o.expect(two.betti == make_pure_diagram(DegreeSequence::two_step(0, d1)).table.to_explicit(4),
             "(x+y+z)^" + std::to_string(d1));
    o.expect(two.complete, "incomplete two-step witness");
    const auto tail = min_free_resolution(
        quotient_module({x.pow(d1), y.pow(d1), z.pow(d1)}, field), d1 + 6, 4);
    o.expect(tail.betti == make_pure_diagram(DegreeSequence::tail(0, d1)).table.to_explicit(4),
             "x^d,y^d,z^d with d=" + std::to_string(d1));
    o.expect(tail.complete && tail.tail_consistent, "tail witness status");
  }
  return o;
}

// 2
Outcome mcm_resolutions(const FieldSpec& field) {
  Outcome o;
  o.expect(min_free_resolution(builtin("omega", field), 6, 4).betti ==
               diagonal({2, 3, 6, 12, 24}),
           "omega");
  for (auto n : {"M1", "M2", "M3"})
    o.expect(min_free_resolution(builtin(n, field), 6, 4).betti == diagonal({1, 1, 2, 4, 8}), n);
  for (auto n : {"M12", "M13", "M23"})
    o.expect(min_free_resolution(builtin(n, field), 6, 4).betti == diagonal({1, 2, 4, 8, 16}),
             n);
  return o;
}

// 3
Outcome hilbert_series(const FieldSpec& field) {
  Outcome o;
  struct Row {
    const char* name;
    std::vector<std::int64_t> numerator;
    int e;
  };
  const Row rows[] = {{"B", {1, 2}, 3},  {"omega", {2, 1}, 3}, {"M1", {1, 1}, 2},
                      {"M2", {1, 1}, 2}, {"M3", {1, 1}, 2},    {"M12", {1}, 1},
                      {"M13", {1}, 1},   {"M23", {1}, 1}};
  for (const auto& r : rows) {
    const auto h = hilbert_data(builtin(r.name, field), 6);
    o.expect(h.lo == 0 && h.numerator == r.numerator, std::string(r.name) + " numerator " +
                                                          h.numerator_string());
    o.expect(exact_equal(h.multiplicity, r.e), std::string(r.name) + " multiplicity");
  }
  return o;
}

// 4
Outcome herzog_kuhl() {
  Outcome o;
  const std::vector<std::vector<std::int64_t>> expect = {
      {1, 1, 0, 0, 0, 0, 0, 0},
      {2, 3, 3, 6, 12, 24, 48, 96},
      {1, 2, 3, 6, 12, 24, 48, 96},
      {1, 3, 6, 12, 24, 48, 96, 192}};
  const Rational cs[] = {0, 1, Rational(3, 2), 2};
  for (std::size_t k = 0; k < 4; ++k)
    o.expect(hk_ray(cs[k]).prefix(8) == expect[k], "v" + std::to_string(k + 1));
  o.expect(hk_relations_check(), "relations on 8 entries");
  return o;
}

// 5
Outcome cone_soundness() {
  Outcome o;
  const int hom = 4;
  int n = 0;
  for (std::uint32_t seed = 1; seed <= 60; ++seed, ++n) {
    const auto sum = oracle::random_monomial_sum(seed);
    const auto m = sum.module(FieldSpec::default_field());
    const int bound = m.max_presentation_degree() + hom + 1;
    const auto res = min_free_resolution(m, bound, hom);
    const auto tag = "seed " + std::to_string(seed);
    o.expect(res.complete, tag + " incomplete");
    o.expect(check_graded(res.betti).member, tag + " not in cone");
    const auto range = res.betti.degree_range();
    for (int k = range->first - 2; k <= range->second + 2; ++k)
      o.expect(eval_functional(Functional::gamma(k), res.betti).sign() >= 0,
               tag + " gamma(" + std::to_string(k) + ") < 0");
    o.expect(exact_equal(eval_functional(Functional::gamma_inf(), res.betti),
                         Rational(sum.multiplicity())),
             tag + " gamma_inf != e(M)");
  }
  o.detail = o.ok ? std::to_string(n) + " modules" : o.detail;
  return o;
}

// 6
Outcome round_trip() {
  Outcome o;
  const verify::Window w(-5, 10);
  int n = 0;
  for (std::uint32_t seed = 1; seed <= 250; ++seed, ++n) {
    const auto v = verify::random_cone_point(w, 1 + static_cast<int>(seed % 6), seed);
    const auto tag = "seed " + std::to_string(seed);
    DecompositionTrace trace;
    try {
      trace = decompose_with_trace(v);
    } catch (const std::exception& e) {
      o.fail(tag + ": " + e.what());
      continue;
    }
    o.expect(trace.decomposition.recombine() == v, tag + " recombine");
    for (const auto& r : trace.residuals)
      o.expect(check_graded(r).member, tag + " residual left the cone");
    const auto& t = trace.decomposition.terms;
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = a + 1; b < t.size(); ++b)
        o.expect(degseq_comparable(t[a].degrees, t[b].degrees), tag + " incomparable terms");
  }
  o.detail = o.ok ? std::to_string(n) + " tables" : o.detail;
  return o;
}

// 7
Outcome window_equality() {
  Outcome o;
  for (const auto& w : {verify::Window(0, 1), verify::Window(0, 3), verify::Window(-2, 2),
                        verify::Window(0, 5)})
    o.expect(verify::cross_check(w).equal, "window " + w.to_string());
  o.expect(verify::cross_check(verify::Window(0, 3)).n_rays == 13, "[0,3] rays != 13");
  verify::CrossCheckOptions fl;
  fl.finite_length = true;
  const auto f = verify::cross_check(verify::Window(0, 3), fl);
  o.expect(f.equal && f.n_rays == 9, "finite length [0,3]");
  verify::CrossCheckOptions no_gamma, no_alpha;
  no_gamma.families.gamma = false;
  no_alpha.families.alpha = false;
  o.expect(!verify::cross_check(verify::Window(0, 3), no_gamma).equal, "gamma ablation");
  o.expect(!verify::cross_check(verify::Window(0, 3), no_alpha).equal, "alpha ablation");
  return o;
}

// 8
Outcome local_cones() {
  Outcome o;
  const auto d1 = decompose_local({2, 3, 3}, false);
  o.expect(d1.a.is_zero() && d1.b == Rational(3, 2) && d1.c == Rational(1, 2), "(2,3,3)");
  const auto d2 = decompose_local({1, 2, 3}, false);
  o.expect(d2.a.is_zero() && d2.b == Rational(1, 2) && d2.c == Rational(1, 2), "(1,2,3)");
  // halfspace oracle: nonnegative coordinates over the three rays
  for (int b0 = 0; b0 <= 6; ++b0)
    for (int b1 = 0; b1 <= 6; ++b1)
      for (int b2 = 0; b2 <= 6; ++b2) {
        const Rational c = Rational(b2, 6);
        const Rational b = Rational(b1) - 3 * c;
        const Rational a = Rational(b0) - b - c;
        const bool in = a.sign() >= 0 && b.sign() >= 0 && c.sign() >= 0;
        std::ostringstream tag;
        tag << "(" << b0 << "," << b1 << "," << b2 << ")";
        o.expect(check_local({b0, b1, b2}, false).member == in, tag.str());
        o.expect(check_local({b0, b1, b2}, true).member == (in && a.is_zero()),
                 tag.str() + " finite length");
      }
  return o;
}

// 9
Outcome field_independence() {
  Outcome o;
  for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(32003)}) {
    const auto tag = " over " + field.to_string();
    if (auto r = witnesses(field); !r.ok) o.fail("1" + tag + ": " + r.detail);
    if (auto r = mcm_resolutions(field); !r.ok) o.fail("2" + tag + ": " + r.detail);
    if (auto r = hilbert_series(field); !r.ok) o.fail("3" + tag + ": " + r.detail);
  }
  return o;
}

}  // namespace

int main() {
  const std::array<std::pair<const char*, std::function<Outcome()>>, 9> criteria = {{
      {"witness resolutions", [] { return witnesses(FieldSpec::default_field()); }},
      {"MCM resolutions", [] { return mcm_resolutions(FieldSpec::default_field()); }},
      {"Hilbert series", [] { return hilbert_series(FieldSpec::default_field()); }},
      {"Herzog-Kuhl rays", herzog_kuhl},
      {"cone soundness", cone_soundness},
      {"decomposition round trip", round_trip},
      {"window equality", window_equality},
      {"local cones", local_cones},
      {"field independence", field_independence},
  }};
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome r;
    try {
      r = criteria[k].second();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    std::cout << (r.ok ? "PASS" : "FAIL") << " " << k + 1 << " " << criteria[k].first;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
    if (!r.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
