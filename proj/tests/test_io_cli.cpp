#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "bcone/cli/commands.hpp"

using namespace bcone;
namespace cli = bcone::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

template <class Fn>
Run run(Fn fn) {
  std::ostringstream out, err;
  const int code = fn(out, err);
  return {code, out.str(), err.str()};
}

Run check(const std::string& text, bool fl = false, bool dec_only = false) {
  std::istringstream in(text);
  return run([&](auto& o, auto& e) { return cli::cmd_check(in, fl, dec_only, o, e); });
}

Run run_resolve(const std::string& text, int deg, int hom, std::optional<std::string> field = {}) {
  std::istringstream in(text);
  return run([&](auto& o, auto& e) { return cli::cmd_resolve(in, deg, hom, field, o, e); });
}

bool contains(const std::string& s, const std::string& what) {
  return s.find(what) != std::string::npos;
}

}  // namespace

TEST(TableFile, PrintIsCanonical) {
  BettiTable t;
  t.set(1, 2, Rational(6, 4));
  t.set(0, 0, 1);
  t.set(0, -1, 2);
  EXPECT_EQ(io::print_table(t),
            "betti v1\nmode canonical\nentry 0 -1 2\nentry 0 0 1\nentry 1 2 3/2\n");
}

TEST(TableFile, RoundTripRandom) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> row(0, 6), deg(-6, 6), num(-9, 9), den(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    BettiTable t(trial % 2 ? TailMode::Explicit : TailMode::Canonical);
    for (int k = 0; k < trial % 7; ++k) {
      const int i = t.mode() == TailMode::Canonical ? row(rng) % 3 : row(rng);
      t.set(i, deg(rng), Rational(num(rng), den(rng)));
    }
    EXPECT_EQ(io::parse_table(io::print_table(t)), t);
  }
}

TEST(TableFile, ParseErrors) {
  EXPECT_THROW(io::parse_table("mode canonical\n"), io::ParseError);
  EXPECT_THROW(io::parse_table("betti v1\nentry 0 0 1\n"), io::ParseError);
  EXPECT_THROW(io::parse_table("betti v1\nmode canonical\nentry 3 0 1\n"), io::ParseError);
  EXPECT_THROW(io::parse_table("betti v1\nmode canonical\nentry 0 0 1\nentry 0 0 2\n"),
               io::ParseError);
  EXPECT_THROW(io::parse_table("betti v1\nmode explicit\nentry 0 x 1\n"), io::ParseError);
  EXPECT_THROW(io::parse_table("betti v1\n"), io::ParseError);
  const auto t = io::parse_table(
      "# comment\nbetti v1\n\nsource: hand\nmode explicit\nentry 4 4 24\nentry 0 0 0\n");
  EXPECT_EQ(t.at(4, 4), Rational(24));
  EXPECT_EQ(t.support_size(), 1u);
}

TEST(ModuleFile, Formats) {
  const auto m = io::parse_module("field QQ\nrel x^3, y^3, z^3\n");
  EXPECT_TRUE(m.field_given);
  EXPECT_EQ(m.module.field, resolve::FieldSpec::rationals());
  EXPECT_EQ(m.module.gen_degrees, std::vector<int>{0});
  EXPECT_EQ(m.module.relation_count(), 3u);
  const auto two = io::parse_module("gens 0 0\nrel -z, y, 0\nrel 0, -y, x\n");
  EXPECT_EQ(two.module.rows, resolve::builtin("omega").rows);
  EXPECT_FALSE(two.field_given);
  EXPECT_EQ(io::parse_module("field Fp 101\nbuiltin M12\n").module.field,
            resolve::FieldSpec::prime(101));
  EXPECT_THROW(io::parse_module("rel x + 1\n"), io::ParseError);
  EXPECT_THROW(io::parse_module("gens 0 1\nrel x\n"), io::ParseError);
  EXPECT_THROW(io::parse_module("builtin nope\n"), io::ParseError);
  EXPECT_THROW(io::parse_module("field Fp 100\n"), io::ParseError);
  EXPECT_THROW(io::parse_module("frobnicate\n"), io::ParseError);
  EXPECT_THROW(io::parse_module("gens 0 1\nrel x, y\nrel y, x\n"), io::ParseError);
}

TEST(Cli, Rays) {
  auto r = run([](auto& o, auto& e) { return cli::cmd_rays(0, "2", false, o, e); });
  EXPECT_EQ(r.code, cli::Ok);
  EXPECT_EQ(r.out, "betti v1\nmode canonical\nentry 0 0 1\nentry 1 2 1\n");
  r = run([](auto& o, auto& e) { return cli::cmd_rays(0, "1", true, o, e); });
  EXPECT_EQ(r.out, "betti v1\nmode canonical\nentry 0 0 1\nentry 1 1 3\nentry 2 2 6\n");
  r = run([](auto& o, auto& e) { return cli::cmd_rays(1, "inf", false, o, e); });
  EXPECT_EQ(r.out, "betti v1\nmode canonical\nentry 0 1 1\n");
  EXPECT_EQ(run([](auto& o, auto& e) { return cli::cmd_rays(2, "1", false, o, e); }).code,
            cli::Usage);
  EXPECT_EQ(run([](auto& o, auto& e) { return cli::cmd_rays(0, "inf", true, o, e); }).code,
            cli::Usage);
}

TEST(Cli, RaysPipeIntoCheck) {
  for (int d0 = -2; d0 <= 2; ++d0)
    for (int d1 = d0 + 1; d1 <= 4; ++d1)
      for (bool tail : {false, true}) {
        const auto r = run([&](auto& o, auto& e) {
          return cli::cmd_rays(d0, std::to_string(d1), tail, o, e);
        });
        const auto c = check(r.out);
        EXPECT_EQ(c.code, cli::Ok);
        EXPECT_TRUE(contains(c.out, "member: yes"));
        EXPECT_EQ(std::count(c.out.begin(), c.out.end(), '\n'), 2);
      }
}

TEST(Cli, CheckExamples) {
  auto c = check("betti v1\nmode canonical\nentry 0 0 1\nentry 1 3 3\nentry 2 4 6\n");
  EXPECT_EQ(c.code, cli::Ok);
  EXPECT_EQ(c.out, "member: yes\nterm (0,3,4,...) 1\n");
  c = check("betti v1\nmode canonical\nentry 0 0 1\n", true);
  EXPECT_EQ(c.code, cli::Negative);
  EXPECT_EQ(c.out, "member: no\nviolated: gamma_inf value: 3\n");
  c = check(
      "betti v1\nmode explicit\nentry 0 0 1\nentry 1 1 3\nentry 2 2 6\nentry 3 3 13\n");
  EXPECT_EQ(c.code, cli::Negative);
  EXPECT_EQ(c.out, "member: no\nviolated: doubling_eq(2,2) value: -1\n");
  c = check("betti v1\nmode canonical\nentry 0 0 2\nentry 1 1 4\nentry 2 2 6\n", false, true);
  EXPECT_EQ(c.out, "term (0,1,2,...) 1\nterm (0,1,inf) 1\n");
  EXPECT_EQ(check("betti v2\n").code, cli::Usage);
}

TEST(Cli, ResolveExamples) {
  auto r = run_resolve("builtin omega\n", 6, 4);
  EXPECT_EQ(r.code, cli::Ok);
  EXPECT_TRUE(contains(r.out, "mode explicit\nentry 0 0 2\nentry 1 1 3\nentry 2 2 6\n"
                              "entry 3 3 12\nentry 4 4 24\n"));
  EXPECT_TRUE(contains(r.out, "\ne: 3\n"));
  EXPECT_TRUE(contains(r.out, "tail_consistent: yes"));
  r = run_resolve("rel x^3, y^3, z^3\n", 10, 4);
  EXPECT_EQ(r.code, cli::Ok);
  EXPECT_TRUE(contains(r.out, "entry 0 0 1\nentry 1 3 3\nentry 2 4 6\nentry 3 5 12\n"));
  EXPECT_TRUE(contains(r.out, "\ne: 0\n"));
  r = run_resolve("builtin B\n", 6, 4);
  EXPECT_TRUE(contains(r.out, "mode explicit\nentry 0 0 1\nfield"));
  EXPECT_TRUE(contains(r.out, "\ne: 3\n"));
  r = run_resolve("builtin omega\n", 3, 4);
  EXPECT_EQ(r.code, cli::Negative);
  EXPECT_TRUE(contains(r.err, "partial"));
  EXPECT_EQ(run_resolve("rel x +\n", 6, 4).code, cli::Usage);
  r = run_resolve("field Fp 101\nbuiltin M1\n", 6, 4, "qq");
  EXPECT_TRUE(contains(r.out, "field: QQ"));
}

TEST(Cli, ResolvePipesIntoCheck) {
  for (auto name : resolve::builtin_names) {
    const auto r = run_resolve("builtin " + std::string(name) + "\n", 7, 4);
    ASSERT_EQ(r.code, cli::Ok) << name;
    EXPECT_EQ(check(r.out).code, cli::Ok) << name;
  }
}

TEST(Cli, Hilbert) {
  std::istringstream in("builtin omega\n");
  const auto r = run([&](auto& o, auto& e) { return cli::cmd_hilbert(in, 6, {}, o, e); });
  EXPECT_EQ(r.code, cli::Ok);
  EXPECT_TRUE(contains(r.out, "numerator: 2 + t\ne: 3\n"));
}

TEST(Cli, VerifyWindow) {
  auto r = run([](auto& o, auto& e) {
    return cli::cmd_verify_window(0, 3, false, false, false, 6, o, e);
  });
  EXPECT_EQ(r.code, cli::Ok);
  EXPECT_TRUE(contains(r.out, "generators: 13\nrays: 13\n"));
  EXPECT_TRUE(contains(r.out, "equal: yes"));
  r = run([](auto& o, auto& e) {
    return cli::cmd_verify_window(0, 3, false, true, false, 6, o, e);
  });
  EXPECT_EQ(r.code, cli::Negative);
  r = run([](auto& o, auto& e) {
    return cli::cmd_verify_window(0, 20, false, false, false, 6, o, e);
  });
  EXPECT_EQ(r.code, cli::Usage);
}

TEST(Cli, Local) {
  auto local = [](const char* mode, const char* a, const char* b, const char* c, bool fl) {
    return run([&](auto& o, auto& e) { return cli::cmd_local(mode, a, b, c, fl, o, e); });
  };
  auto r = local("decompose", "2", "3", "3", false);
  EXPECT_EQ(r.code, cli::Ok);
  EXPECT_EQ(r.out, "a: 0\nb: 3/2\nc: 1/2\n");
  r = local("check", "1", "3", "6", true);
  EXPECT_EQ(r.code, cli::Ok);
  EXPECT_EQ(r.out, "member: yes\n");
  r = local("check", "0", "1", "0", false);
  EXPECT_EQ(r.code, cli::Negative);
  EXPECT_EQ(r.out, "member: no\nviolated: 3b0+b2-3b1 value: -3\n");
  EXPECT_EQ(local("decompose", "0", "1", "0", false).code, cli::Negative);
  EXPECT_EQ(local("frob", "0", "1", "0", false).code, cli::Usage);
  EXPECT_EQ(local("check", "a", "1", "0", false).code, cli::Usage);
}
