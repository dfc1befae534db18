#include <gtest/gtest.h>

#include <algorithm>

#include "smonkit/catalog.hpp"
#include "smonkit/layered.hpp"
#include "smonkit/random.hpp"

using namespace smonkit;

namespace {

std::vector<std::string> names(const Quiver& q, const std::vector<Path>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(path_name(q, p));
  return out;
}

bool contains_subword(const std::vector<std::size_t>& w, const std::vector<std::size_t>& g) {
  return std::search(w.begin(), w.end(), g.begin(), g.end()) != w.end();
}

// Counts composable arrow words (applied order) avoiding every generator as a
// contiguous block, plus one trivial path per vertex.
std::size_t brute_path_count(const Quiver& q, const std::vector<Path>& gens, std::size_t max_len) {
  std::size_t count = q.num_vertices();
  std::vector<std::vector<std::size_t>> words;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) words.push_back({a});
  for (std::size_t len = 1; len <= max_len && !words.empty(); ++len) {
    std::vector<std::vector<std::size_t>> keep;
    for (const auto& w : words) {
      bool zero = false;
      for (const auto& g : gens) zero = zero || contains_subword(w, g.arrows);
      if (!zero) keep.push_back(w);
    }
    count += keep.size();
    words.clear();
    for (const auto& w : keep)
      for (std::size_t a = 0; a < q.num_arrows(); ++a)
        if (q.arrow(a).source == q.arrow(w.back()).target) {
          auto n = w;
          n.push_back(a);
          words.push_back(n);
        }
  }
  return count;
}

// Random acyclic quiver with arrows j -> i, j > i, and random length-2/3 monomial relations.
BoundQuiver random_bound_quiver(Rng& rng) {
  std::size_t n = 2 + uniform_index(rng, 4);
  std::vector<Arrow> arrows;
  std::size_t na = 1 + uniform_index(rng, 5);
  for (std::size_t k = 0; k < na; ++k) {
    std::size_t t = uniform_index(rng, n - 1);
    std::size_t s = t + 1 + uniform_index(rng, n - 1 - t);
    arrows.push_back({"a" + std::to_string(k), s, t});
  }
  Quiver q(n, arrows);
  std::vector<Path> all = nonzero_paths(q, MonomialIdeal{});
  std::vector<Path> gens;
  for (const auto& p : all)
    if (p.length() >= 2 && uniform_index(rng, 3) == 0) gens.push_back(p);
  return BoundQuiver(q, MonomialIdeal(gens));
}

}  // namespace

TEST(NonzeroPaths, Q3) {
  auto bq = catalog::q3();
  EXPECT_EQ(bq.dimension(), 5u);
  EXPECT_EQ(names(bq.quiver(), bq.paths()), (std::vector<std::string>{"e1", "e2", "e3", "alpha", "beta"}));
}

TEST(NonzeroPaths, TruncatedLoop) {
  auto bq = catalog::truncated_loop(2);
  EXPECT_EQ(names(bq.quiver(), bq.paths()), (std::vector<std::string>{"e1", "x"}));
  EXPECT_EQ(catalog::truncated_loop(6).dimension(), 6u);
}

TEST(NonzeroPaths, Arrowless) {
  EXPECT_EQ(BoundQuiver(Quiver(4, {}), MonomialIdeal{}).dimension(), 4u);
}

TEST(NonzeroPaths, NotAdmissible) {
  Quiver loop(1, {{"x", 0, 0}});
  EXPECT_THROW(BoundQuiver(loop, MonomialIdeal{}), NotAdmissible);
  Quiver a2(2, {{"a", 1, 0}});
  EXPECT_THROW(BoundQuiver(a2, MonomialIdeal({Path{1, 0, {0}}})), NotAdmissible);
  EXPECT_THROW(BoundQuiver(a2, MonomialIdeal({Path{1, 1, {}}})), NotAdmissible);
  EXPECT_THROW(BoundQuiver(a2, MonomialIdeal({Path{1, 0, {5, 5}}})), UnknownArrow);
}

TEST(NonzeroPaths, NakayamaDimension) { EXPECT_EQ(catalog::nakayama_17_18_18().dimension(), 53u); }

TEST(KAlpha, Examples) {
  auto bq = catalog::q3();
  const auto& q = bq.quiver();
  EXPECT_EQ(names(q, k_alpha(bq, q.arrow_index("beta"))), (std::vector<std::string>{"alpha"}));
  EXPECT_TRUE(k_alpha(bq, q.arrow_index("alpha")).empty());
  auto loop = catalog::truncated_loop(2);
  EXPECT_EQ(names(loop.quiver(), k_alpha(loop, 0)), (std::vector<std::string>{"x"}));
  EXPECT_THROW(k_alpha(bq, 7), UnknownArrow);
}

TEST(LAlpha, Examples) {
  auto bq = catalog::q3();
  const auto& q = bq.quiver();
  EXPECT_EQ(names(q, l_alpha(bq, q.arrow_index("alpha"))), (std::vector<std::string>{"beta"}));
  EXPECT_TRUE(l_alpha(bq, q.arrow_index("beta")).empty());
  auto loop = catalog::truncated_loop(2);
  EXPECT_EQ(names(loop.quiver(), l_alpha(loop, 0)), (std::vector<std::string>{"x"}));
}

TEST(Opposite, Q3) {
  auto op = catalog::q3().opposite();
  const auto& q = op.quiver();
  EXPECT_EQ(q.arrow(q.arrow_index("alpha")).source, 1u);
  EXPECT_EQ(q.arrow(q.arrow_index("alpha")).target, 2u);
  ASSERT_EQ(op.ideal().generators().size(), 1u);
  EXPECT_EQ(path_name(q, op.ideal().generators()[0]), "alpha*beta");
  EXPECT_EQ(op.dimension(), 5u);
  auto pt = BoundQuiver(Quiver(3, {}), MonomialIdeal{});
  EXPECT_EQ(pt.opposite(), pt);
}

TEST(Quiver, SourcesAndOrder) {
  const auto bq = catalog::q3();
  const auto& q3 = bq.quiver();
  EXPECT_EQ(q3.source_vertices(), (std::vector<std::size_t>{2}));
  EXPECT_EQ(q3.topological_order(), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(q3.has_descending_labels());
  EXPECT_EQ(catalog::a2().quiver().source_vertices(), (std::vector<std::size_t>{1}));
  Quiver two(4, {{"a", 1, 0}, {"b", 3, 2}});
  EXPECT_EQ(two.source_vertices(), (std::vector<std::size_t>{1, 3}));
  Quiver cyc(2, {{"a", 0, 1}, {"b", 1, 0}});
  EXPECT_FALSE(cyc.is_acyclic());
  EXPECT_THROW(cyc.topological_order(), Cyclic);
}

TEST(Quiver, CyclicTensorFactorRejected) {
  auto a = catalog::algebra(catalog::point());
  EXPECT_THROW(make_context(a, catalog::truncated_loop(2)), Cyclic);
}

TEST(Quiver, UnknownArrowName) {
  EXPECT_THROW(catalog::q3().quiver().arrow_index("gamma"), UnknownArrow);
}

TEST(PathProps, RandomQuivers) {
  Rng rng = make_rng(21);
  for (int t = 0; t < 200; ++t) {
    auto bq = random_bound_quiver(rng);
    const auto& q = bq.quiver();
    // Path count against an independent word enumeration.
    ASSERT_EQ(bq.dimension(), brute_path_count(q, bq.ideal().generators(), q.num_vertices()));
    // Closed under contiguous subpaths.
    for (const auto& p : bq.paths())
      for (std::size_t i = 0; i < p.length(); ++i)
        for (std::size_t j = i + 1; j <= p.length(); ++j) {
          Path s{q.arrow(p.arrows[i]).source, q.arrow(p.arrows[j - 1]).target, {p.arrows.begin() + i, p.arrows.begin() + j}};
          ASSERT_NE(bq.find(s), npos);
        }
    // K_alpha and L_alpha by direct monomial membership.
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
      for (const auto& p : k_alpha(bq, a)) {
        Path ap = p;
        ap.arrows.push_back(a);
        ap.end = q.arrow(a).target;
        ASSERT_FALSE(bq.ideal().contains(p));
        ASSERT_TRUE(bq.ideal().contains(ap));
      }
      for (const auto& p : l_alpha(bq, a)) {
        Path pa = p;
        pa.arrows.insert(pa.arrows.begin(), a);
        pa.start = q.arrow(a).source;
        ASSERT_FALSE(bq.ideal().contains(p));
        ASSERT_TRUE(bq.ideal().contains(pa));
      }
    }
    ASSERT_EQ(bq.opposite().opposite(), bq);
    ASSERT_EQ(bq.opposite().dimension(), bq.dimension());
  }
}
