#include <gtest/gtest.h>

#include "smonkit/catalog.hpp"
#include "smonkit/harness.hpp"
#include "smonkit/layered.hpp"

using namespace smonkit;

namespace {

AlgebraPtr ground() { return catalog::algebra(catalog::point()); }
AlgebraPtr kx2() { return catalog::algebra(catalog::truncated_loop(2)); }
AlgebraPtr kq3() { return catalog::algebra(catalog::q3()); }

ModulePtr kmod(std::size_t d) {
  auto a = ground();
  return share(Module(a, {d}, {}));
}

std::vector<ContextPtr> contexts() {
  return suites::default_contexts(2);
}

// Right-hand side of the Cartan-Eilenberg formula in degree m.
std::size_t ce_rhs(const std::vector<std::size_t>& ea, const std::vector<std::size_t>& eb, std::size_t m) {
  std::size_t s = 0;
  for (std::size_t p = 0; p <= m; ++p) s += ea[p] * eb[m - p];
  return s;
}

const RandomBudget kTiny{2, 2};

}  // namespace

TEST(Tensor, ConcentratedAtSimple) {
  auto ctx = make_context(kx2(), catalog::q3());
  Module m = projective_module(ctx->base, 0);
  for (std::size_t i = 0; i < 3; ++i) {
    auto x = tensor(ctx, m, simple_module(ctx->factor_alg, i));
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(x.branch(j)->total_dim(), j == i ? 2u : 0u);
    for (const auto& h : x.maps())
      for (const auto& c : h.maps) EXPECT_TRUE(c.is_zero());
  }
}

TEST(Tensor, WithP3) {
  auto ctx = make_context(kx2(), catalog::q3());
  Module m = projective_module(ctx->base, 0);
  auto x = tensor(ctx, m, projective_module(ctx->factor_alg, 2));
  EXPECT_EQ(*x.branch(2), m);
  EXPECT_EQ(*x.branch(1), m);
  EXPECT_TRUE(x.branch(0)->is_zero());
  const auto& q = ctx->quiver();
  EXPECT_EQ(x.map(q.arrow_index("alpha")).maps[0], Matrix::identity(2, 2));
  EXPECT_TRUE(x.map(q.arrow_index("beta")).maps[0].is_zero());
  EXPECT_TRUE(validate(x).empty());
}

TEST(Tensor, DimensionIsMultiplicative) {
  for (const auto& ctx : contexts()) {
    Rng rng = make_rng(41);
    for (int t = 0; t < 10; ++t) {
      Module m = random_module(ctx->base, kTiny, rng);
      Module u = random_module(ctx->factor_alg, kTiny, rng);
      EXPECT_EQ(tensor(ctx, m, u).total_dim(), m.total_dim() * u.total_dim());
      EXPECT_TRUE(check_module(tensor_modules(m, u, ctx->lambda)).empty());
    }
  }
}

TEST(Validate, Violations) {
  auto ctx = make_context(ground(), catalog::q3());
  auto k1 = kmod(1);
  const auto& q = ctx->quiver();
  std::vector<Hom> maps(2, zero_hom(k1, k1));
  maps[q.arrow_index("alpha")].maps[0] = Matrix::identity(2, 1);
  maps[q.arrow_index("beta")].maps[0] = Matrix::identity(2, 1);
  LayeredRep x(ctx, {k1, k1, k1}, maps);
  EXPECT_EQ(validate(x), (std::vector<std::string>{"relation beta*alpha is nonzero"}));
  auto actx = make_context(kx2(), catalog::a2());
  auto p = share(projective_module(actx->base, 0));
  auto s = share(simple_module(actx->base, 0));
  Hom bad(s, p, {Matrix::from_rows(2, {{1}, {0}})});
  LayeredRep y(actx, {p, s}, {bad});
  ASSERT_EQ(validate(y).size(), 1u);
  EXPECT_EQ(validate(y)[0], "map a is not an A-hom");
}

TEST(CokerKer, Examples) {
  auto ctx = make_context(kx2(), catalog::q3());
  Rng rng = make_rng(42);
  for (int t = 0; t < 10; ++t) {
    Module m = random_module(ctx->base, kTiny, rng);
    for (std::size_t i = 0; i < 3; ++i) {
      auto x = tensor(ctx, m, projective_module(ctx->factor_alg, i));
      for (std::size_t j = 0; j < 3; ++j) {
        Module c = coker_i(x, j);
        if (j == i)
          EXPECT_EQ(iso_probe(share(c), share(m)).verdict, IsoVerdict::Iso);
        else
          EXPECT_TRUE(c.is_zero());
      }
    }
  }
  auto x = tensor(ctx, projective_module(ctx->base, 0), simple_module(ctx->factor_alg, 2));
  EXPECT_EQ(coker_i(x, 2), *x.branch(2));
  auto kctx = make_context(ground(), catalog::q3());
  auto p3 = tensor(kctx, *kmod(1), projective_module(kctx->factor_alg, 2));
  EXPECT_TRUE(ker_i(p3, 1).is_zero());
}

TEST(Smon, Examples) {
  auto ctx = make_context(ground(), catalog::q3());
  auto p3 = tensor(ctx, *kmod(1), projective_module(ctx->factor_alg, 2));
  EXPECT_TRUE(smon_check(p3, ClassPredicate::all()).pass);
  auto s2 = tensor(ctx, *kmod(1), simple_module(ctx->factor_alg, 1));
  auto r = smon_check(s2, ClassPredicate::all());
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.condition, "m2");
  EXPECT_NE(r.location.find("beta"), std::string::npos);
  for (const auto& c : contexts()) {
    Rng rng = make_rng(43);
    for (int t = 0; t < 10; ++t) {
      Module m = random_module(c->base, kTiny, rng);
      for (std::size_t i = 0; i < c->quiver_vertices(); ++i)
        EXPECT_TRUE(smon_check(tensor(c, m, projective_module(c->factor_alg, i)), ClassPredicate::all()).pass);
    }
  }
}

TEST(Smon, Predicates) {
  auto ctx = make_context(kq3(), catalog::a2());
  auto s3 = simple_module(ctx->base, 2);
  auto x = tensor(ctx, s3, projective_module(ctx->factor_alg, 1));
  EXPECT_TRUE(smon_check(x, ClassPredicate::all()).pass);
  auto r = smon_check(x, ClassPredicate::proj());
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.condition, "m3");
  EXPECT_FALSE(smon_check(x, ClassPredicate::semi_gp(4)).pass);
  auto y = tensor(ctx, projective_module(ctx->base, 2), projective_module(ctx->factor_alg, 1));
  EXPECT_TRUE(smon_check(y, ClassPredicate::proj()).pass);
  EXPECT_TRUE(smon_check(y, ClassPredicate::gproj(4)).pass);
  EXPECT_TRUE(smon_check(y, ClassPredicate::perp_of_dual_regular(ctx->base, 4)).pass);
}

TEST(Sepi, Examples) {
  auto ctx = make_context(ground(), catalog::q3());
  auto s2 = tensor(ctx, *kmod(1), simple_module(ctx->factor_alg, 1));
  auto r = sepi_check(s2, ClassPredicate::all());
  EXPECT_FALSE(r.pass);
  // Direct evaluation: X_alpha = 0, L_alpha = {beta}, ker X_beta = X_2 = k.
  EXPECT_TRUE(r.condition == "e1" || r.condition == "e2");
  for (std::size_t i = 0; i < 3; ++i) {
    auto inj = tensor(ctx, *kmod(1), injective_module(ctx->factor_alg, i));
    EXPECT_TRUE(sepi_check(inj, ClassPredicate::all()).pass) << i;
  }
}

TEST(Sepi, DualOfSmon) {
  for (const auto& c : contexts()) {
    Rng rng = make_rng(44);
    for (int t = 0; t < 12; ++t) {
      auto y = LayeredRep::from_flat(c, random_module(c->lambda, kTiny, rng));
      auto d = dual_layered(y);
      EXPECT_EQ(smon_check(y, ClassPredicate::all()).pass, sepi_check(d, ClassPredicate::all()).pass);
      EXPECT_EQ(d.total_dim(), y.total_dim());
      EXPECT_EQ(dual_layered(d).to_flat().dims(), y.to_flat().dims());
    }
  }
  auto ctx = make_context(ground(), catalog::q3());
  auto p3 = tensor(ctx, *kmod(1), projective_module(ctx->factor_alg, 2));
  EXPECT_TRUE(sepi_check(dual_layered(p3), ClassPredicate::all()).pass);
}

TEST(Dual, OfTensor) {
  auto ctx = make_context(kq3(), catalog::q3());
  auto op = opposite_context(*ctx);
  Rng rng = make_rng(45);
  for (int t = 0; t < 6; ++t) {
    Module m = random_module(ctx->base, kTiny, rng);
    std::size_t i = uniform_index(rng, 3);
    auto d = dual_layered(tensor(ctx, m, projective_module(ctx->factor_alg, i)));
    Module dm(op->base, dual(m).dims(), dual(m).maps());
    auto expect = tensor(op, dm, injective_module(op->factor_alg, i));
    EXPECT_EQ(iso_probe(share(d.to_flat()), share(expect.to_flat())).verdict, IsoVerdict::Iso);
  }
  auto z = LayeredRep::from_flat(ctx, Module::zero(ctx->lambda));
  EXPECT_EQ(dual_layered(z).total_dim(), 0u);
}

TEST(LayeredExt, Examples) {
  auto ctx = make_context(kx2(), catalog::q3());
  auto s = simple_module(ctx->base, 0);
  auto x = tensor(ctx, s, simple_module(ctx->factor_alg, 2));
  EXPECT_EQ(layered_ext_dim(x, x, 1), 1u);
  auto ea = ext_dims(resolve(share(s), 3), share(s), 1);
  auto s3 = share(simple_module(ctx->factor_alg, 2));
  auto eb = ext_dims(resolve(s3, 3), s3, 1);
  EXPECT_EQ(ce_rhs(ea, eb, 1), 1u);
  for (std::size_t v = 0; v < 1; ++v)
    for (std::size_t i = 0; i < 3; ++i) {
      auto p = layered_projective(ctx, v, i);
      for (std::size_t k = 1; k <= 3; ++k) EXPECT_EQ(layered_ext_dim(p, x, k), 0u);
    }
}

TEST(Adjunction, Examples) {
  auto ctx = make_context(ground(), catalog::q3());
  auto p3 = tensor(ctx, *kmod(1), projective_module(ctx->factor_alg, 2));
  auto r = adjunction_check(p3, *kmod(1), 2, 0);
  EXPECT_TRUE(r.first_checked);
  EXPECT_EQ(r.first_lhs, 1u);
  EXPECT_EQ(r.first_rhs, 1u);
  auto s2 = tensor(ctx, *kmod(1), simple_module(ctx->factor_alg, 1));
  EXPECT_THROW(adjunction_check(s2, *kmod(1), 1, 1), SmonRequired);
  auto zr = adjunction_check(s2, *kmod(1), 1, 0);
  EXPECT_TRUE(zr.agree());
}

TEST(Adjunction, SecondIdentityOnTensors) {
  auto ctx = make_context(kq3(), catalog::a2());
  Rng rng = make_rng(46);
  for (int t = 0; t < 10; ++t) {
    Module m1 = random_module(ctx->base, kTiny, rng), m2 = random_module(ctx->base, kTiny, rng);
    std::size_t i = uniform_index(rng, 2);
    auto x = tensor(ctx, m2, projective_module(ctx->factor_alg, i));
    for (std::size_t k = 0; k <= 3; ++k) {
      auto r = adjunction_check(x, m1, i, k);
      EXPECT_EQ(r.second_lhs, r.second_rhs);
      EXPECT_EQ(r.second_rhs, ext_dim(share(m1), share(m2), k));
    }
  }
}

TEST(Split, Examples) {
  auto ctx = make_context(kx2(), catalog::a2());
  Rng rng = make_rng(47);
  for (int t = 0; t < 6; ++t) {
    Module m = random_module(ctx->base, kTiny, rng);
    auto x = tensor(ctx, m, projective_module(ctx->factor_alg, 1));
    auto tr = split_at_source(x, 1);
    EXPECT_EQ(*tr.y, m);
    EXPECT_EQ(tr.x.branch(0)->dims(), m.dims());
    EXPECT_TRUE(is_isomorphism(tr.phi));
    auto xs = tensor(ctx, m, simple_module(ctx->factor_alg, 1));
    auto ts = split_at_source(xs, 1);
    EXPECT_TRUE(ts.x.to_flat().is_zero());
    EXPECT_EQ(*ts.y, m);
    EXPECT_EQ(hom_rank(ts.phi), 0u);
  }
  EXPECT_THROW(split_at_source(tensor(ctx, projective_module(ctx->base, 0), simple_module(ctx->factor_alg, 0)), 0),
               NotSource);
}

TEST(Split, XzConditions) {
  auto ctx = make_context(kq3(), catalog::a2());
  for (std::size_t v = 0; v < 3; ++v) {
    auto rep = xz_condition_check(split_at_source(layered_projective(ctx, v, 1), 1), 8);
    EXPECT_TRUE(rep.conditions_hold());
    EXPECT_TRUE(rep.assembled.certified());
  }
  auto t = split_at_source(tensor(ctx, simple_module(ctx->base, 2), simple_module(ctx->factor_alg, 1)), 1);
  EXPECT_TRUE(t.x.to_flat().is_zero());
  auto rep = xz_condition_check(t, 8);
  EXPECT_FALSE(rep.y_cert.certified());
  EXPECT_TRUE(rep.assembled.refuted());
  EXPECT_TRUE(rep.agree());
}

TEST(KroneckerTriple, Examples) {
  auto kq = kq3();
  auto t1 = kronecker_triple(share(projective_module(kq, 2)), 1);
  EXPECT_TRUE(smon_check(assemble(t1), ClassPredicate::all()).pass);
  auto t2 = kronecker_triple(share(simple_module(kx2(), 0)), 2);
  EXPECT_TRUE(is_injective(t2.phi));
  EXPECT_TRUE(smon_check(assemble(t2), ClassPredicate::all()).pass);
  auto t3 = kronecker_triple(share(simple_module(kq, 2)), 1);
  EXPECT_EQ(hom_rank(t3.phi), 0u);
  auto r = smon_check(assemble(t3), ClassPredicate::all());
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.condition, "m2");
}

TEST(LayeredPd, Examples) {
  auto ctx = make_context(kq3(), catalog::a2());
  auto x = tensor(ctx, simple_module(ctx->base, 2), simple_module(ctx->factor_alg, 0));
  EXPECT_EQ(layered_pd(x, 6), std::optional<std::size_t>(2));
  auto y = tensor(ctx, projective_module(ctx->base, 1), simple_module(ctx->factor_alg, 1));
  EXPECT_EQ(layered_pd(y, 6), std::optional<std::size_t>(1));
  auto z = tensor(ctx, projective_module(ctx->base, 0), projective_module(ctx->factor_alg, 1));
  EXPECT_EQ(layered_pd(z, 6), std::optional<std::size_t>(0));
}

// Properties over the default contexts.

class LayeredProps : public ::testing::TestWithParam<int> {
 protected:
  ContextPtr ctx() const { return contexts()[GetParam()]; }
};

TEST_P(LayeredProps, ExtensionClosureAndExactCoker) {
  auto c = ctx();
  Rng rng = make_rng(51, GetParam());
  for (int t = 0; t < 15; ++t) {
    auto x = suites::planted_smon(c, rng), y = suites::planted_smon(c, rng);
    auto e = random_extension(share(x.to_flat()), share(y.to_flat()), rng);
    auto ex = LayeredRep::from_flat(c, e.module);
    ASSERT_TRUE(smon_check(ex, ClassPredicate::all()).pass);
    for (std::size_t i = 0; i < c->quiver_vertices(); ++i)
      {
        auto a = coker_i(x, i).dims(), b = coker_i(y, i).dims();
        for (std::size_t v = 0; v < a.size(); ++v) a[v] += b[v];
        ASSERT_EQ(coker_i(ex, i).dims(), a);
      }
  }
}

TEST_P(LayeredProps, SmonIffPerp) {
  auto c = ctx();
  Rng rng = make_rng(52, GetParam());
  auto t = share(tensor_modules(injective_cogenerator(c->base), *regular_module(c->factor_alg).module, c->lambda));
  std::size_t passes = 0;
  for (int k = 0; k < 40; ++k) {
    auto x = LayeredRep::from_flat(c, random_module(c->lambda, kTiny, rng));
    bool s = smon_check(x, ClassPredicate::all()).pass;
    passes += s;
    ASSERT_EQ(s, suites::ext_vanishes(share(x.to_flat()), t, 8));
  }
  EXPECT_GT(passes, 0u);
  EXPECT_LT(passes, 40u);
}

TEST_P(LayeredProps, CartanEilenberg) {
  auto c = ctx();
  Rng rng = make_rng(53, GetParam());
  for (int k = 0; k < 10; ++k) {
    Module l = random_module(c->base, kTiny, rng), m = random_module(c->base, kTiny, rng);
    Module u = random_module(c->factor_alg, kTiny, rng), v = random_module(c->factor_alg, kTiny, rng);
    auto ea = ext_dims(resolve(share(l), 4), share(m), 3);
    auto eb = ext_dims(resolve(share(u), 4), share(v), 3);
    auto el = ext_dims(resolve(share(tensor_modules(l, u, c->lambda)), 4), share(tensor_modules(m, v, c->lambda)), 3);
    for (std::size_t d = 0; d <= 3; ++d) ASSERT_EQ(el[d], ce_rhs(ea, eb, d));
  }
}

TEST_P(LayeredProps, PdAdditivity) {
  auto c = ctx();
  Rng rng = make_rng(54, GetParam());
  int checked = 0;
  for (int k = 0; k < 20; ++k) {
    Module m = random_module(c->base, kTiny, rng);
    Module u = random_module(c->factor_alg, kTiny, rng);
    auto pm = pd_up_to(share(m), 4), pu = pd_up_to(share(u), 4);
    if (!pm || !pu) continue;
    ++checked;
    ASSERT_EQ(layered_pd(tensor(c, m, u), 9), std::optional<std::size_t>(*pm + *pu));
  }
  EXPECT_GT(checked, 0);
}

TEST_P(LayeredProps, SplitRoundTrip) {
  auto c = ctx();
  Rng rng = make_rng(55, GetParam());
  std::size_t n = suites::split_vertex(c->quiver());
  for (int k = 0; k < 20; ++k) {
    auto x = LayeredRep::from_flat(c, random_module(c->lambda, kTiny, rng));
    auto t = split_at_source(x, n);
    ASSERT_EQ(assemble(t).to_flat(), x.to_flat());
    ASSERT_TRUE(is_natural(t.phi));
  }
}

INSTANTIATE_TEST_SUITE_P(Contexts, LayeredProps, ::testing::Values(0, 1, 2, 3));
