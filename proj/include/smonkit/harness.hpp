#pragma once

// Named verification suites over sampled and planted instances.
//
// Instance i draws from its own random stream derived from (seed, i); kind is
// i mod 4 (0, 1: random, 2: planted positive, 3: planted negative) and the
// context is (i / 4) mod (number of contexts). Reports are assembled in index
// order, so serial and parallel runs print identical bytes.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "smonkit/catalog.hpp"
#include "smonkit/certificate.hpp"
#include "smonkit/layered.hpp"
#include "smonkit/nakayama.hpp"
#include "smonkit/random.hpp"

namespace smonkit {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ce",         "adjunction", "smon-perp",         "lz3",
                                              "pd-add",     "triangular", "weakly-gorenstein", "nakayama"};
  return names;
}

struct SuiteConfig {
  std::string suite;
  std::optional<std::size_t> bound;  // default 8, or 60 for nakayama
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  Scalar prime = 2;
  std::vector<ContextPtr> contexts;  // empty: the default contexts
  AlgebraPtr algebra;                // nakayama / weakly-gorenstein base algebra
  std::optional<std::size_t> instance;
  std::size_t threads = 0;  // 0: SMONKIT_THREADS or 1

  std::size_t effective_bound() const { return bound.value_or(suite == "nakayama" ? 60 : 8); }
};

struct InstanceRecord {
  std::size_t index = 0;
  bool pass = true;
  std::string kind;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t bound = 0;
  std::size_t samples = 0;
  std::size_t contexts = 0;
  std::vector<InstanceRecord> records;
  std::vector<std::string> summary;
  double seconds = 0;

  std::size_t passed() const {
    std::size_t n = 0;
    for (const auto& r : records) n += r.pass;
    return n;
  }
  std::size_t failed() const { return records.size() - passed(); }
  bool ok() const { return failed() == 0; }

  const InstanceRecord* first_failure() const {
    for (const auto& r : records)
      if (!r.pass) return &r;
    return nullptr;
  }

  std::string replay(const InstanceRecord& r) const {
    return "suite " + suite + " --seed " + std::to_string(seed) + " --bound " + std::to_string(bound) +
           " --samples " + std::to_string(samples) + " --instance " + std::to_string(r.index);
  }

  std::string text(bool timing) const {
    std::ostringstream os;
    os << "suite " << suite << "\n";
    os << "seed " << seed << "\n";
    os << "bound " << bound << "\n";
    os << "samples " << samples << "\n";
    os << "contexts " << contexts << "\n";
    os << "instances " << records.size() << "\n";
    os << "passed " << passed() << "\n";
    os << "failed " << failed() << "\n";
    for (const auto& s : summary) os << "summary " << s << "\n";
    if (const auto* f = first_failure()) {
      os << "counterexample instance " << f->index << " kind " << f->kind << "\n";
      os << "counterexample detail " << f->detail << "\n";
      os << "counterexample replay " << replay(*f) << "\n";
    } else {
      os << "counterexample none\n";
    }
    if (timing) {
      os.setf(std::ios::fixed);
      os.precision(3);
      os << "time " << seconds << "s\n";
    }
    return os.str();
  }

  std::string records_text() const {
    std::ostringstream os;
    for (const auto& r : records)
      os << suite << "\t" << r.index << "\t" << (r.pass ? "PASS" : "FAIL") << "\t" << r.kind << "\t" << r.detail
         << "\n";
    return os.str();
  }
};

inline std::size_t thread_count(const SuiteConfig& cfg) {
  if (cfg.threads) return cfg.threads;
  if (const char* env = std::getenv("SMONKIT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 1;
}

// Runs `fn` on every index, in parallel when allowed, and returns the results in index order.
inline std::vector<InstanceRecord> run_instances(const std::vector<std::size_t>& indices, std::size_t threads,
                                                 const std::function<InstanceRecord(std::size_t)>& fn) {
  std::vector<InstanceRecord> out(indices.size());
  auto guarded = [&](std::size_t k) {
    try {
      out[k] = fn(indices[k]);
    } catch (const std::exception& e) {
      out[k] = {indices[k], false, "error", e.what()};
    }
    out[k].index = indices[k];
  };
  if (threads <= 1 || indices.size() <= 1) {
    for (std::size_t k = 0; k < indices.size(); ++k) guarded(k);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min(threads, indices.size()); ++t)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < indices.size(); k = next++) guarded(k);
    });
  for (auto& th : pool) th.join();
  return out;
}

namespace suites {

inline std::vector<ContextPtr> default_contexts(Scalar p) {
  std::vector<ContextPtr> out;
  for (const auto& a : {catalog::truncated_loop(2), catalog::q3()})
    for (const auto& q : {catalog::a2(), catalog::q3()}) out.push_back(make_context(catalog::algebra(a, p), q));
  return out;
}

inline std::string dims_string(const std::vector<std::size_t>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

inline std::string kind_name(std::size_t index) {
  switch (index % 4) {
    case 2:
      return "planted-positive";
    case 3:
      return "planted-negative";
    default:
      return "random";
  }
}

inline const RandomBudget kSmall{2, 2};

inline Module random_a_module(const AlgebraPtr& a, Rng& rng) { return random_module(a, kSmall, rng); }

inline LayeredRep random_layered(const ContextPtr& ctx, Rng& rng) {
  return LayeredRep::from_flat(ctx, random_module(ctx->lambda, kSmall, rng));
}

inline std::size_t random_vertex(Rng& rng, std::size_t n) { return uniform_index(rng, n); }

// Vertices of Q with at least one outgoing arrow.
inline std::vector<std::size_t> non_sinks(const Quiver& q) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    if (!q.outgoing(v).empty()) out.push_back(v);
  return out;
}

// m (x) P(i), or an extension of two of them.
inline LayeredRep planted_smon(const ContextPtr& ctx, Rng& rng) {
  const std::size_t nq = ctx->quiver_vertices();
  auto pick = [&] {
    Module m = random_a_module(ctx->base, rng);
    return tensor(ctx, m, projective_module(ctx->factor_alg, random_vertex(rng, nq)));
  };
  LayeredRep x = pick();
  if (uniform_index(rng, 2) == 0) return x;
  LayeredRep y = pick();
  auto e = random_extension(share(x.to_flat()), share(y.to_flat()), rng);
  return LayeredRep::from_flat(ctx, e.module);
}

// m (x) S(i) at a vertex with an outgoing arrow, m nonzero: (m2) fails.
inline LayeredRep planted_non_smon(const ContextPtr& ctx, Rng& rng) {
  auto cands = non_sinks(ctx->quiver());
  Module m = random_a_module(ctx->base, rng);
  std::size_t i = cands[uniform_index(rng, cands.size())];
  return tensor(ctx, m, simple_module(ctx->factor_alg, i));
}

inline bool ext_vanishes(const ModulePtr& x, const ModulePtr& t, std::size_t bound) {
  if (x->is_zero()) return true;
  auto e = ext_dims(resolve(x, bound + 1), t, bound);
  for (std::size_t i = 1; i <= bound; ++i)
    if (e[i]) return false;
  return true;
}

inline std::string ctx_name(const TensorContext& c) {
  return "A=" + std::to_string(c.base->num_vertices()) + "v/" + std::to_string(c.base->dimension()) + "d Q=" +
         std::to_string(c.quiver_vertices()) + "v/" + std::to_string(c.quiver().num_arrows()) + "a";
}

// ---- ce ----
inline InstanceRecord ce_instance(const ContextPtr& ctx, std::size_t index, Rng& rng) {
  InstanceRecord r{index, true, kind_name(index), {}};
  Module l, m, u, v;
  switch (index % 4) {
    case 2:  // projective left factor
      l = projective_module(ctx->base, random_vertex(rng, ctx->base_vertices()));
      m = random_a_module(ctx->base, rng);
      u = random_module(ctx->factor_alg, kSmall, rng);
      v = random_module(ctx->factor_alg, kSmall, rng);
      r.kind = "planted-projective";
      break;
    case 3:  // simples
      l = simple_module(ctx->base, random_vertex(rng, ctx->base_vertices()));
      m = simple_module(ctx->base, random_vertex(rng, ctx->base_vertices()));
      u = simple_module(ctx->factor_alg, random_vertex(rng, ctx->quiver_vertices()));
      v = simple_module(ctx->factor_alg, random_vertex(rng, ctx->quiver_vertices()));
      r.kind = "planted-simple";
      break;
    default:
      l = random_a_module(ctx->base, rng);
      m = random_a_module(ctx->base, rng);
      u = random_module(ctx->factor_alg, kSmall, rng);
      v = random_module(ctx->factor_alg, kSmall, rng);
  }
  const std::size_t top = 3;
  auto ea = ext_dims(resolve(share(l), top + 1), share(m), top);
  auto eb = ext_dims(resolve(share(u), top + 1), share(v), top);
  auto lu = share(tensor_modules(l, u, ctx->lambda));
  auto mv = share(tensor_modules(m, v, ctx->lambda));
  auto el = ext_dims(resolve(lu, top + 1), mv, top);
  std::ostringstream os;
  os << ctx_name(*ctx) << " dimL=" << dims_string(l.dims()) << " dimM=" << dims_string(m.dims())
     << " dimU=" << dims_string(u.dims()) << " dimV=" << dims_string(v.dims());
  for (std::size_t k = 0; k <= top; ++k) {
    std::size_t rhs = 0;
    for (std::size_t p = 0; p <= k; ++p) rhs += ea[p] * eb[k - p];
    os << " m" << k << "=" << el[k] << "/" << rhs;
    if (el[k] != rhs) r.pass = false;
  }
  r.detail = os.str();
  return r;
}

// ---- adjunction ----
inline InstanceRecord adjunction_instance(const ContextPtr& ctx, std::size_t index, Rng& rng) {
  InstanceRecord r{index, true, kind_name(index), {}};
  LayeredRep y = index % 4 == 2 ? planted_smon(ctx, rng)
                 : index % 4 == 3 ? planted_non_smon(ctx, rng)
                                  : random_layered(ctx, rng);
  Module m = random_a_module(ctx->base, rng);
  const std::size_t i = random_vertex(rng, ctx->quiver_vertices());
  const bool smon = smon_check(y, ClassPredicate::all()).pass;
  if (index % 4 == 2 && !smon) r.pass = false;
  if (index % 4 == 3 && smon) r.pass = false;
  std::ostringstream os;
  os << ctx_name(*ctx) << " dimY=" << dims_string(y.to_flat().dims()) << " dimM=" << dims_string(m.dims())
     << " i=" << i + 1 << " smon=" << (smon ? "yes" : "no");
  for (std::size_t k = 0; k <= 3; ++k) {
    auto a = adjunction_check(y, m, i, k, false);
    if (a.first_checked) os << " k" << k << ":(1)" << a.first_lhs << "/" << a.first_rhs;
    os << " k" << k << ":(2)" << a.second_lhs << "/" << a.second_rhs;
    if (!a.agree()) r.pass = false;
    if (k == 0 && !a.first_checked) r.pass = false;
  }
  r.detail = os.str();
  return r;
}

// ---- smon-perp ----
inline InstanceRecord smon_perp_instance(const ContextPtr& ctx, std::size_t index, Rng& rng, std::size_t bound) {
  InstanceRecord r{index, true, kind_name(index), {}};
  LayeredRep x = index % 4 == 2 ? planted_smon(ctx, rng)
                 : index % 4 == 3 ? planted_non_smon(ctx, rng)
                                  : random_layered(ctx, rng);
  auto t = share(tensor_modules(injective_cogenerator(ctx->base), *regular_module(ctx->factor_alg).module, ctx->lambda));
  auto flat = share(x.to_flat());
  auto sm = smon_check(x, ClassPredicate::all());
  bool perp = ext_vanishes(flat, t, bound);
  std::size_t used = bound;
  if (perp != sm.pass) {
    used = 2 * bound;
    perp = ext_vanishes(flat, t, used);
  }
  std::ostringstream os;
  os << ctx_name(*ctx) << " dim=" << dims_string(flat->dims()) << " smon=" << sm.to_string()
     << " perp=" << (perp ? "yes" : "no") << " N=" << bound << (used != bound ? " escalated=" + std::to_string(used) : "");
  r.pass = perp == sm.pass;
  if (index % 4 == 2 && !sm.pass) r.pass = false;
  if (index % 4 == 3 && sm.pass) r.pass = false;
  r.detail = os.str();
  return r;
}

// ---- lz3 ----
inline bool branchwise_gp(const LayeredRep& x, std::size_t bound) {
  if (!smon_check(x, ClassPredicate::all()).pass) return false;
  for (std::size_t i = 0; i < x.context()->quiver_vertices(); ++i)
    if (!gp_cert(share(coker_i(x, i)), bound).certified()) return false;
  return true;
}

inline InstanceRecord lz3_instance(const ContextPtr& ctx, std::size_t index, Rng& rng, std::size_t bound) {
  InstanceRecord r{index, true, kind_name(index), {}};
  LayeredRep x;
  if (index % 4 == 2) {
    // m (x) P(i) with m a projective or, over a self-injective base, anything.
    Module m = uniform_index(rng, 2) ? projective_module(ctx->base, random_vertex(rng, ctx->base_vertices()))
                                     : random_a_module(ctx->base, rng);
    x = tensor(ctx, m, projective_module(ctx->factor_alg, random_vertex(rng, ctx->quiver_vertices())));
  } else if (index % 4 == 3) {
    x = planted_non_smon(ctx, rng);
  } else {
    x = random_layered(ctx, rng);
  }
  auto flat = share(x.to_flat());
  auto lhs = gp_cert(flat, bound);
  bool rhs = branchwise_gp(x, bound);
  std::size_t used = bound;
  if (lhs.certified() != rhs) {
    used = 2 * bound;
    lhs = gp_cert(flat, used);
    rhs = branchwise_gp(x, used);
  }
  r.pass = lhs.certified() == rhs;
  if (index % 4 == 3 && lhs.certified()) r.pass = false;
  std::ostringstream os;
  os << ctx_name(*ctx) << " dim=" << dims_string(flat->dims()) << " layered=" << lhs.label()
     << " smon+branch-gp=" << (rhs ? "yes" : "no") << (used != bound ? " escalated=" + std::to_string(used) : "");
  r.detail = os.str();
  return r;
}

// ---- pd-add ----
inline InstanceRecord pd_add_instance(const ContextPtr& ctx, std::size_t index, Rng& rng) {
  InstanceRecord r{index, true, kind_name(index), {}};
  const std::size_t cap = 5;
  auto draw = [&](const AlgebraPtr& a) -> std::pair<Module, std::size_t> {
    if (index % 4 >= 2) {
      Module s = simple_module(a, random_vertex(rng, a->num_vertices()));
      if (auto pd = pd_up_to(share(s), cap)) return {s, *pd};
    }
    for (int attempt = 0; attempt < 20; ++attempt) {
      Module m = random_a_module(a, rng);
      if (auto pd = pd_up_to(share(m), cap)) return {m, *pd};
    }
    return {projective_module(a, random_vertex(rng, a->num_vertices())), 0};
  };
  if (index % 4 >= 2) r.kind = "planted-simple";
  auto [m, pm] = draw(ctx->base);
  auto [u, pu] = draw(ctx->factor_alg);
  auto flat = share(tensor_modules(m, u, ctx->lambda));
  auto pd = pd_up_to(flat, pm + pu + 1);
  r.pass = pd && *pd == pm + pu;
  r.detail = ctx_name(*ctx) + " dimM=" + dims_string(m.dims()) + " dimU=" + dims_string(u.dims()) +
             " pdM=" + std::to_string(pm) + " pdU=" + std::to_string(pu) + " pd=" + pd_string(pd, pm + pu + 1);
  return r;
}

// ---- triangular ----
inline std::size_t split_vertex(const Quiver& q) {
  for (std::size_t v = q.num_vertices(); v-- > 0;)
    if (q.incoming(v).empty() && !q.outgoing(v).empty()) return v;
  return npos;
}

inline InstanceRecord triangular_instance(const ContextPtr& ctx, std::size_t index, Rng& rng, std::size_t bound) {
  InstanceRecord r{index, true, kind_name(index), {}};
  const std::size_t n = split_vertex(ctx->quiver());
  LayeredRep x;
  if (index % 4 == 2) {
    x = layered_projective(ctx, random_vertex(rng, ctx->base_vertices()), random_vertex(rng, ctx->quiver_vertices()));
  } else if (index % 4 == 3) {
    x = tensor(ctx, simple_module(ctx->base, random_vertex(rng, ctx->base_vertices())),
               simple_module(ctx->factor_alg, n));
    r.kind = "planted-simple";
  } else {
    x = random_layered(ctx, rng);
  }
  std::ostringstream os;
  auto flat = x.to_flat();
  Triple t = split_at_source(x, n);
  bool round_trip = assemble(t).to_flat() == flat;
  auto rep = xz_condition_check(t, bound);
  std::size_t used = bound;
  if (!rep.agree()) {
    used = 2 * bound;
    rep = xz_condition_check(t, used);
  }
  os << ctx_name(*ctx) << " dim=" << dims_string(flat.dims()) << " split=" << n + 1
     << " roundtrip=" << (round_trip ? "yes" : "no") << " (i)=" << (rep.phi_star_epi ? "yes" : "no")
     << " (ii)=" << (rep.ext_iso ? "yes" : "no@" + std::to_string(rep.first_ext_failure))
     << " (iii)=" << rep.y_cert.label() << " assembled=" << rep.assembled.label();
  r.pass = round_trip && rep.agree();
  if (index % 4 == 2 && !rep.assembled.certified()) r.pass = false;
  // Both default base algebras are left weakly Gorenstein, so a semi-GP module
  // must have a monic connecting map with GP cokernel and a GP top part.
  if (rep.assembled.certified()) {
    bool mono = is_injective(t.phi);
    bool coker_gp = gp_cert(share(cokernel(t.phi).module), used).certified();
    bool y_gp = gp_cert(t.y, used).certified();
    os << " mono=" << (mono ? "yes" : "no") << " coker-gp=" << (coker_gp ? "yes" : "no")
       << " y-gp=" << (y_gp ? "yes" : "no");
    if (!(mono && coker_gp && y_gp)) r.pass = false;
  }
  if (used != bound) os << " escalated=" << used;
  r.detail = os.str();
  return r;
}

// ---- weakly-gorenstein ----
struct WgOutcome {
  bool semi = false;
  bool gp = false;
};

inline InstanceRecord wg_record(std::size_t index, const std::string& side, const std::string& what,
                                const Certificate& semi, const Certificate& gp) {
  InstanceRecord r{index, true, side, {}};
  r.pass = !semi.certified() || gp.certified();
  r.detail = what + " semi-gp=" + semi.label() + " gp=" + gp.label();
  return r;
}

}  // namespace suites

inline SuiteReport run_suite(const SuiteConfig& cfg) {
  using namespace suites;
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = cfg.suite;
  rep.seed = cfg.seed;
  rep.bound = cfg.effective_bound();
  rep.samples = cfg.samples;
  const std::size_t bound = rep.bound;
  const std::size_t threads = thread_count(cfg);

  auto select = [&](std::size_t total) {
    std::vector<std::size_t> idx;
    if (cfg.instance) {
      if (*cfg.instance < total) idx.push_back(*cfg.instance);
    } else {
      for (std::size_t i = 0; i < total; ++i) idx.push_back(i);
    }
    return idx;
  };

  if (cfg.suite == "nakayama" || cfg.suite == "weakly-gorenstein") {
    AlgebraPtr a = cfg.algebra ? cfg.algebra : catalog::algebra(catalog::nakayama_17_18_18(), cfg.prime);
    rep.contexts = 1;
    if (cfg.suite == "nakayama") {
      auto n = make_nakayama(a);
      auto core = gorenstein_core(n, bound);
      auto mods = enumerate_nakayama(n);
      std::vector<std::size_t> all;
      for (std::size_t i = 0; i < mods.size(); ++i) all.push_back(i);
      auto idx = select(mods.size());
      for (auto i : idx) {
        InstanceRecord r{i, true, core.projective[i] ? "projective" : "non-projective", {}};
        r.detail = "top=" + std::to_string(mods[i].top + 1) + " length=" + std::to_string(mods[i].length) +
                   " semi-gp=" + core.semi_gp[i].label() + " gp=" + core.gp[i].label();
        if (core.semi_gp[i].certified() && !core.gp[i].certified()) r.pass = false;
        if (core.gp[i].certified() && core.semi_gp[i].refuted()) r.pass = false;
        rep.records.push_back(std::move(r));
      }
      std::ostringstream k;
      for (std::size_t v = 0; v < n.kupisch.size(); ++v) k << (v ? "," : "") << n.kupisch[v];
      rep.summary.push_back("kupisch (" + k.str() + ")");
      rep.summary.push_back("indecomposables " + std::to_string(core.indecomposables));
      rep.summary.push_back("non-projective-gp " + std::to_string(core.non_projective_gp.size()));
      for (const auto& e : core.non_projective_gp)
        rep.summary.push_back("gp top=" + std::to_string(e.top + 1) + " length=" + std::to_string(e.length) +
                              " syzygy-period=" + std::to_string(e.period));
      rep.summary.push_back("core " + std::to_string(core.core_size()));
      for (const auto& p : core.problems) rep.summary.push_back("problem " + p);
      if (!core.problems.empty()) {
        InstanceRecord r{mods.size(), false, "invariant", core.problems.front()};
        rep.records.push_back(std::move(r));
      }
    } else {
      std::optional<NakayamaAlgebra> nak;
      try {
        nak = make_nakayama(a);
      } catch (const NotNakayama&) {
      }
      std::vector<ModulePtr> amods;
      std::vector<std::string> names;
      if (nak) {
        for (const auto& m : enumerate_nakayama(*nak)) {
          amods.push_back(m.module);
          names.push_back("top=" + std::to_string(m.top + 1) + " length=" + std::to_string(m.length));
        }
      } else {
        for (std::size_t i = 0; i < cfg.samples; ++i) {
          Rng rng = make_rng(cfg.seed, i);
          amods.push_back(share(random_module(a, kSmall, rng)));
          names.push_back("dim=" + dims_string(amods.back()->dims()));
        }
      }
      auto ctx = cfg.contexts.empty() ? make_context(a, catalog::a2()) : cfg.contexts.front();
      const std::size_t na = amods.size();
      auto idx = select(na + cfg.samples);
      rep.records = run_instances(idx, threads, [&](std::size_t i) {
        if (i < na)
          return wg_record(i, "base", names[i], semi_gp_cert(amods[i], bound), gp_cert(amods[i], bound));
        Rng rng = make_rng(cfg.seed, i);
        auto flat = share(random_layered(ctx, rng).to_flat());
        return wg_record(i, "tensor", "dim=" + dims_string(flat->dims()), semi_gp_cert(flat, bound),
                         gp_cert(flat, bound));
      });
      std::size_t base_semi = 0, base_gp = 0, ten_semi = 0, ten_gp = 0;
      bool base_ok = true, ten_ok = true;
      for (const auto& r : rep.records) {
        bool semi = r.detail.find("semi-gp=CERTIFIED") != std::string::npos;
        bool gp = r.detail.find(" gp=CERTIFIED") != std::string::npos;
        if (r.kind == "base") {
          base_semi += semi;
          base_gp += semi && gp;
          base_ok = base_ok && r.pass;
        } else {
          ten_semi += semi;
          ten_gp += semi && gp;
          ten_ok = ten_ok && r.pass;
        }
      }
      rep.summary.push_back("base semi-gp " + std::to_string(base_semi) + " of which gp " + std::to_string(base_gp));
      rep.summary.push_back("tensor semi-gp " + std::to_string(ten_semi) + " of which gp " + std::to_string(ten_gp));
      rep.summary.push_back(std::string("sides ") + (base_ok == ten_ok ? "agree" : "disagree") + " (" +
                            (base_ok ? "positive" : "negative") + "/" + (ten_ok ? "positive" : "negative") + ")");
      auto ev = evidence_non_gorenstein(a, std::min<std::size_t>(bound, 30));
      rep.summary.push_back("regular injective dimension " + ev.label());
    }
  } else {
    std::vector<ContextPtr> ctxs = cfg.contexts.empty() ? default_contexts(cfg.prime) : cfg.contexts;
    rep.contexts = ctxs.size();
    std::function<InstanceRecord(std::size_t)> fn;
    auto ctx_of = [&](std::size_t i) { return ctxs[(i / 4) % ctxs.size()]; };
    if (cfg.suite == "ce") {
      fn = [&](std::size_t i) {
        Rng rng = make_rng(cfg.seed, i);
        return ce_instance(ctx_of(i), i, rng);
      };
    } else if (cfg.suite == "adjunction") {
      fn = [&](std::size_t i) {
        Rng rng = make_rng(cfg.seed, i);
        return adjunction_instance(ctx_of(i), i, rng);
      };
    } else if (cfg.suite == "smon-perp") {
      fn = [&](std::size_t i) {
        Rng rng = make_rng(cfg.seed, i);
        return smon_perp_instance(ctx_of(i), i, rng, bound);
      };
    } else if (cfg.suite == "lz3") {
      fn = [&](std::size_t i) {
        Rng rng = make_rng(cfg.seed, i);
        return lz3_instance(ctx_of(i), i, rng, bound);
      };
    } else if (cfg.suite == "pd-add") {
      fn = [&](std::size_t i) {
        Rng rng = make_rng(cfg.seed, i);
        return pd_add_instance(ctx_of(i), i, rng);
      };
    } else if (cfg.suite == "triangular") {
      fn = [&](std::size_t i) {
        Rng rng = make_rng(cfg.seed, i);
        return triangular_instance(ctx_of(i), i, rng, bound);
      };
    } else {
      throw Error("unknown suite " + cfg.suite);
    }
    rep.records = run_instances(select(cfg.samples), threads, fn);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace smonkit
