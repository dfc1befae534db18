#include <gtest/gtest.h>

#include "smonkit/catalog.hpp"
#include "smonkit/harness.hpp"
#include "smonkit/nakayama.hpp"

using namespace smonkit;

namespace {

SuiteConfig config(const std::string& suite, std::size_t samples, std::uint64_t seed, std::size_t threads) {
  SuiteConfig c;
  c.suite = suite;
  c.samples = samples;
  c.seed = seed;
  c.threads = threads;
  return c;
}

}  // namespace

TEST(Suites, AllPassSmall) {
  for (const auto& s : suite_names()) {
    auto c = config(s, 24, 5, 2);
    if (s == "nakayama") c.algebra = catalog::algebra(catalog::truncated_loop(6));
    if (s == "weakly-gorenstein") c.algebra = catalog::algebra(catalog::truncated_loop(2));
    auto r = run_suite(c);
    EXPECT_TRUE(r.ok()) << r.text(false);
    EXPECT_FALSE(r.records.empty()) << s;
  }
}

TEST(Suites, UnknownName) { EXPECT_THROW(run_suite(config("bogus", 4, 0, 1)), Error); }

TEST(Determinism, SerialMatchesThreaded) {
  for (const std::string s : {"ce", "smon-perp", "triangular", "pd-add"}) {
    auto a = run_suite(config(s, 40, 9, 1));
    auto b = run_suite(config(s, 40, 9, 4));
    auto c = run_suite(config(s, 40, 9, 4));
    EXPECT_EQ(a.text(false), b.text(false)) << s;
    EXPECT_EQ(a.records_text(), b.records_text()) << s;
    EXPECT_EQ(b.records_text(), c.records_text()) << s;
  }
}

TEST(Determinism, SeedChangesInstances) {
  auto a = run_suite(config("lz3", 16, 1, 1));
  auto b = run_suite(config("lz3", 16, 2, 1));
  EXPECT_NE(a.records_text(), b.records_text());
}

TEST(Replay, InstanceMatchesFullRun) {
  auto full = run_suite(config("adjunction", 20, 4, 2));
  for (std::size_t i : {0u, 3u, 7u, 18u}) {
    auto c = config("adjunction", 20, 4, 1);
    c.instance = i;
    auto one = run_suite(c);
    ASSERT_EQ(one.records.size(), 1u);
    EXPECT_EQ(one.records[0].detail, full.records[i].detail);
    EXPECT_EQ(one.records[0].kind, full.records[i].kind);
  }
  auto c = config("adjunction", 20, 4, 1);
  c.instance = 99;
  EXPECT_TRUE(run_suite(c).records.empty());
}

TEST(Report, TextLayout) {
  SuiteReport r;
  r.suite = "ce";
  r.seed = 3;
  r.bound = 8;
  r.samples = 2;
  r.contexts = 1;
  r.records = {{0, true, "random", "ok"}, {1, false, "planted+", "bad"}};
  EXPECT_EQ(r.text(false),
            "suite ce\nseed 3\nbound 8\nsamples 2\ncontexts 1\ninstances 2\npassed 1\nfailed 1\n"
            "counterexample instance 1 kind planted+\ncounterexample detail bad\n"
            "counterexample replay suite ce --seed 3 --bound 8 --samples 2 --instance 1\n");
  EXPECT_EQ(r.records_text(), "ce\t0\tPASS\trandom\tok\nce\t1\tFAIL\tplanted+\tbad\n");
}

TEST(Nakayama, Enumeration) {
  auto n = make_nakayama(catalog::algebra(catalog::truncated_loop(6)));
  auto mods = enumerate_nakayama(n);
  EXPECT_EQ(mods.size(), 6u);
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = i + 1; j < mods.size(); ++j)
      EXPECT_EQ(iso_probe(mods[i].module, mods[j].module).verdict, IsoVerdict::NotIso);
  EXPECT_EQ(enumerate_nakayama(make_nakayama(catalog::algebra(catalog::a2()))).size(), 3u);
  EXPECT_THROW(make_nakayama(catalog::algebra(catalog::kronecker(2))), NotNakayama);
}

TEST(Nakayama, SelfInjectiveCoreIsEverything) {
  auto n = make_nakayama(catalog::algebra(catalog::truncated_loop(2)));
  auto core = gorenstein_core(n, 10);
  EXPECT_EQ(core.indecomposables, 2u);
  for (const auto& g : core.gp) EXPECT_TRUE(g.certified());
  ASSERT_EQ(core.non_projective_gp.size(), 1u);
  EXPECT_EQ(core.non_projective_gp[0].period, 1u);
  EXPECT_EQ(core.core_size(), 2u);
  EXPECT_TRUE(core.problems.empty());
}

TEST(Nakayama, HereditaryCoreIsEmpty) {
  auto core = gorenstein_core(make_nakayama(catalog::algebra(catalog::a2())), 10);
  EXPECT_TRUE(core.non_projective_gp.empty());
  EXPECT_EQ(core.core_size(), 0u);
}

TEST(Nakayama, Kupisch171818) {
  auto n = make_nakayama(catalog::algebra(catalog::nakayama_17_18_18()));
  EXPECT_EQ(n.kupisch, (std::vector<std::size_t>{17, 18, 18}));
  auto core = gorenstein_core(n, 60);
  EXPECT_EQ(core.indecomposables, 53u);
  std::vector<std::size_t> lengths;
  for (const auto& e : core.non_projective_gp) {
    EXPECT_EQ(e.top, 1u);
    lengths.push_back(e.length);
  }
  EXPECT_EQ(lengths, (std::vector<std::size_t>{3, 6, 9, 12, 15}));
  EXPECT_EQ(core.core_size(), 6u);
  EXPECT_TRUE(core.problems.empty());
}

TEST(Evidence, Labels) {
  EXPECT_EQ(evidence_non_gorenstein(catalog::algebra(catalog::truncated_loop(3)), 6).label(), "FINITE(0)");
  auto h = evidence_non_gorenstein(catalog::algebra(catalog::a3()), 6);
  ASSERT_TRUE(h.left && h.right);
  EXPECT_LE(std::max(*h.left, *h.right), 1u);
  EXPECT_EQ(evidence_non_gorenstein(catalog::algebra(catalog::nakayama_17_18_18()), 30).label(), "EXCEEDS(30)");
}
