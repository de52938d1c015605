#include <gtest/gtest.h>

#include "bcone/cone.hpp"
#include "bcone/verify/cross_check.hpp"

using namespace bcone;
using namespace bcone::verify;

namespace {

// Enumerates all shapes over a wider degree range and keeps those whose
// canonical support fits.
std::size_t count_generators(const Window& w, bool finite_length) {
  std::size_t n = 0;
  const auto fits = [&](const DegreeSequence& d) { return w.holds(make_pure_diagram(d).table); };
  for (int d0 = w.jmin - 4; d0 <= w.jmax + 4; ++d0) {
    if (!finite_length && fits(DegreeSequence::free_module(d0))) ++n;
    for (int d1 = d0 + 1; d1 <= w.jmax + 6; ++d1) {
      if (fits(DegreeSequence::two_step(d0, d1))) ++n;
      if (fits(DegreeSequence::tail(d0, d1))) ++n;
    }
  }
  return n;
}

}  // namespace

TEST(Window, GeneratorCountMatchesEnumeration) {
  for (int lo = -3; lo <= 1; ++lo)
    for (int hi = lo; hi <= lo + 6; ++hi)
      for (bool fl : {false, true}) {
        const Window w(lo, hi);
        EXPECT_EQ(window_generators(w, fl).size(), count_generators(w, fl));
      }
}

TEST(Window, VectorRoundTrip) {
  const Window w(-1, 2);
  const auto t = make_pure_diagram(DegreeSequence::tail(-1, 1)).table;
  EXPECT_EQ(w.to_table(w.to_vector(t)), t);
  EXPECT_THROW(w.to_vector(make_pure_diagram(DegreeSequence::tail(0, 2)).table),
               std::invalid_argument);
  EXPECT_THROW(Window(2, 1), std::invalid_argument);
}

TEST(Window, FacetsAgreeWithFullFunctionals) {
  const Window w(0, 3);
  for (const auto& f : window_facets(w))
    for (const auto& g : window_generators(w)) {
      const auto v = w.to_vector(g.table);
      EXPECT_EQ(dot(f.coefficients, v), eval_functional(f.id, g.table));
    }
}

TEST(DoubleDescription, Orthant) {
  const auto rays = extreme_rays(3, {});
  EXPECT_EQ(rays.size(), 3u);
}

TEST(DoubleDescription, Square) {
  // x >= 0, y >= 0, x - y >= 0 in the plane: rays (1,0), (1,1)
  const auto rays = extreme_rays(2, {{1, -1}});
  ASSERT_EQ(rays.size(), 2u);
  for (const auto& r : rays) EXPECT_GE(r[0] - r[1], Rational(0));
}

TEST(CrossCheck, Examples) {
  const auto r03 = cross_check(Window(0, 3));
  EXPECT_TRUE(r03.equal);
  EXPECT_EQ(r03.n_generators, 13u);
  EXPECT_EQ(r03.n_rays, 13u);
  const auto r00 = cross_check(Window(0, 0));
  EXPECT_TRUE(r00.equal);
  EXPECT_EQ(r00.n_generators, 1u);
  CrossCheckOptions fl;
  fl.finite_length = true;
  const auto f03 = cross_check(Window(0, 3), fl);
  EXPECT_TRUE(f03.equal);
  EXPECT_EQ(f03.n_generators, 9u);
  EXPECT_EQ(f03.n_rays, 9u);
}

TEST(CrossCheck, MoreWindows) {
  for (const auto& w : {Window(0, 1), Window(-2, 2), Window(0, 5), Window(-3, -1)}) {
    const auto r = cross_check(w);
    EXPECT_TRUE(r.equal) << w.to_string();
    EXPECT_EQ(r.n_rays, r.n_generators);
    EXPECT_TRUE(r.witnesses.empty());
    EXPECT_TRUE(r.uncovered.empty());
  }
}

TEST(CrossCheck, Ablations) {
  CrossCheckOptions no_gamma;
  no_gamma.families.gamma = false;
  const auto g = cross_check(Window(0, 3), no_gamma);
  EXPECT_FALSE(g.equal);
  ASSERT_FALSE(g.witnesses.empty());
  // some witness fails a dropped gamma inequality
  bool bad = false;
  for (const auto& t : g.witnesses)
    if (!check_graded(t).member) bad = true;
  EXPECT_TRUE(bad);

  CrossCheckOptions no_alpha;
  no_alpha.families.alpha = false;
  const auto a = cross_check(Window(0, 3), no_alpha);
  EXPECT_FALSE(a.equal);
  for (const auto& t : a.witnesses) EXPECT_FALSE(check_graded(t).member);
}

TEST(CrossCheck, WidthCap) {
  EXPECT_THROW(cross_check(Window(0, 9)), WindowTooLarge);
}

TEST(CrossCheck, AlphaBelowTheWindowIsNeeded) {
  // without alpha_{jmin-1} = -v_{2,jmin}, the table (2,jmin)=1 would pass
  const Window w(0, 0);
  BettiTable t;
  t.set(2, 0, 1);
  EXPECT_EQ(eval_functional(Functional::alpha(-1), t), Rational(-1));
  for (int k = 0; k <= 0; ++k) EXPECT_GE(eval_functional(Functional::alpha(k), t), Rational(0));
  for (int k = -2; k <= 0; ++k) EXPECT_GE(eval_functional(Functional::gamma(k), t), Rational(0));
}

TEST(RandomConePoint, DeterministicAndInside) {
  const Window w(-5, 10);
  EXPECT_EQ(random_cone_point(w, 4, 9), random_cone_point(w, 4, 9));
  EXPECT_NE(random_cone_point(w, 4, 9), random_cone_point(w, 4, 10));
  for (std::uint32_t s = 0; s < 30; ++s) EXPECT_TRUE(check_graded(random_cone_point(w, 6, s)).member);
}
