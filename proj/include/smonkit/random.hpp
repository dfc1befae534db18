#pragma once

// Seeded random modules, random extensions and a randomized isomorphism probe.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "smonkit/homological.hpp"
#include "smonkit/module.hpp"

namespace smonkit {

using Rng = std::mt19937_64;

// Independent stream for instance `index` of a run seeded with `seed`.
inline Rng make_rng(std::uint64_t seed, std::uint64_t index = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline Scalar uniform_scalar(Rng& rng, Scalar p) { return std::uniform_int_distribution<Scalar>(0, p - 1)(rng); }

inline Vector random_combination(Rng& rng, const Subspace& s) {
  Vector v(s.ambient(), 0);
  const Scalar p = s.prime();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Scalar c = uniform_scalar(rng, p);
    if (!c) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = field::add(v[j], field::mul(c, s.basis()(i, j), p), p);
  }
  return v;
}

struct RandomBudget {
  std::size_t max_summands = 3;   // projective summands, at least one is used
  std::size_t max_relations = 2;  // radical elements factored out
};

// Quotient of a random sum of indecomposable projectives by the submodule
// generated by random radical elements.
inline Module random_module(const AlgebraPtr& alg, const RandomBudget& budget, Rng& rng) {
  const std::size_t n = alg->num_vertices();
  const std::size_t k = 1 + uniform_index(rng, std::max<std::size_t>(budget.max_summands, 1));
  std::vector<std::size_t> tops;
  for (std::size_t i = 0; i < k; ++i) tops.push_back(uniform_index(rng, n));
  auto ps = projective_sum(alg, tops);
  const std::size_t r = budget.max_relations ? uniform_index(rng, budget.max_relations + 1) : 0;
  if (r == 0) return *ps.module;
  auto rad = radical_spaces(*ps.module);
  std::vector<std::size_t> candidates;
  for (std::size_t x = 0; x < n; ++x)
    if (rad[x].dim() > 0) candidates.push_back(x);
  if (candidates.empty()) return *ps.module;
  std::vector<std::size_t> rtops;
  std::vector<Vector> elems;
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t x = candidates[uniform_index(rng, candidates.size())];
    rtops.push_back(x);
    elems.push_back(random_combination(rng, rad[x]));
  }
  auto rs = projective_sum(alg, rtops);
  Hom g = hom_from_generators(rs, ps.module, elems);
  return quotient_by(ps.module, image_spaces(g)).module;
}

inline Module random_module(const AlgebraPtr& alg, const RandomBudget& budget, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return random_module(alg, budget, rng);
}

struct Extension {
  Module module;  // E with E_x = Y_x + X_x
  Hom inclusion;  // Y -> E
  Hom projection;  // E -> X
};

// A random extension 0 -> Y -> E -> X -> 0 given by a random 1-cocycle:
// E_a = [[Y_a, c_a], [0, X_a]].
inline Extension random_extension(const ModulePtr& x, const ModulePtr& y, Rng& rng) {
  require_same_algebra(x->algebra(), y->algebra());
  const Algebra& a = x->algebra();
  const Scalar p = a.prime();
  std::vector<std::size_t> off{0};
  for (std::size_t g = 0; g < a.num_arrows(); ++g) {
    const auto& ar = a.arrow(g);
    off.push_back(off.back() + y->dim(ar.target) * x->dim(ar.source));
  }
  const std::size_t unknowns = off.back();
  std::vector<std::vector<Scalar>> rows;
  // Upper-right block of the composite along `path`, as a linear form in c, added with sign.
  auto add_terms = [&](const std::vector<std::size_t>& path, Scalar sign, std::vector<Vector>& eqs, std::size_t dy,
                       std::size_t dx) {
    for (std::size_t t = 0; t < path.size(); ++t) {
      const std::size_t g = path[t];
      const auto& ar = a.arrow(g);
      Matrix left = Matrix::identity(p, y->dim(ar.target));
      for (std::size_t u = t + 1; u < path.size(); ++u) left = y->map(path[u]) * left;
      Matrix right = Matrix::identity(p, x->dim(a.arrow(path.front()).source));
      for (std::size_t u = 0; u < t; ++u) right = x->map(path[u]) * right;
      const std::size_t cols_c = x->dim(ar.source);
      for (std::size_t r = 0; r < dy; ++r)
        for (std::size_t q = 0; q < dx; ++q) {
          Vector& eq = eqs[r * dx + q];
          for (std::size_t i = 0; i < left.cols(); ++i) {
            Scalar l = left(r, i);
            if (!l) continue;
            for (std::size_t j = 0; j < cols_c; ++j) {
              Scalar rr = right(j, q);
              if (!rr) continue;
              std::size_t idx = off[g] + i * cols_c + j;
              eq[idx] = field::add(eq[idx], field::mul(sign, field::mul(l, rr, p), p), p);
            }
          }
        }
    }
  };
  for (const auto& rel : a.relations()) {
    const std::size_t start = a.arrow(rel.lhs.front()).source;
    const std::size_t end = a.arrow(rel.lhs.back()).target;
    const std::size_t dy = y->dim(end), dx = x->dim(start);
    std::vector<Vector> eqs(dy * dx, Vector(unknowns, 0));
    add_terms(rel.lhs, 1, eqs, dy, dx);
    if (rel.commutativity()) add_terms(rel.rhs, p - 1, eqs, dy, dx);
    for (auto& e : eqs) rows.push_back(std::move(e));
  }
  Matrix sys(p, rows.size(), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < unknowns; ++j) sys(i, j) = rows[i][j];
  Vector c = random_combination(rng, kernel_basis(sys));
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) dims.push_back(y->dim(v) + x->dim(v));
  std::vector<Matrix> maps;
  for (std::size_t g = 0; g < a.num_arrows(); ++g) {
    const auto& ar = a.arrow(g);
    Matrix e(p, dims[ar.target], dims[ar.source]);
    e.set_block(0, 0, y->map(g));
    e.set_block(y->dim(ar.target), y->dim(ar.source), x->map(g));
    const std::size_t cc = x->dim(ar.source);
    for (std::size_t i = 0; i < y->dim(ar.target); ++i)
      for (std::size_t j = 0; j < cc; ++j) e(i, y->dim(ar.source) + j) = c[off[g] + i * cc + j];
    maps.push_back(std::move(e));
  }
  auto em = share(Module(x->algebra_ptr(), dims, std::move(maps)));
  std::vector<Matrix> inc, pr;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    Matrix i(p, dims[v], y->dim(v)), q(p, x->dim(v), dims[v]);
    for (std::size_t k = 0; k < y->dim(v); ++k) i(k, k) = 1;
    for (std::size_t k = 0; k < x->dim(v); ++k) q(k, y->dim(v) + k) = 1;
    inc.push_back(std::move(i));
    pr.push_back(std::move(q));
  }
  return {*em, Hom(y, em, std::move(inc)), Hom(em, x, std::move(pr))};
}

enum class IsoVerdict { Iso, NotIso, Undecided };

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Undecided;
  std::string reason;
  std::optional<Hom> witness;
};

inline IsoResult iso_probe(const ModulePtr& m, const ModulePtr& n, std::size_t trials = 32, std::uint64_t seed = 0) {
  require_same_algebra(m->algebra(), n->algebra());
  const Algebra& a = m->algebra();
  IsoResult out;
  if (m->dims() != n->dims()) {
    out.verdict = IsoVerdict::NotIso;
    out.reason = "dimension vectors differ";
    return out;
  }
  for (std::size_t g = 0; g < a.num_arrows(); ++g)
    if (rank(m->map(g)) != rank(n->map(g))) {
      out.verdict = IsoVerdict::NotIso;
      out.reason = "rank of " + a.arrow(g).name + " differs";
      return out;
    }
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    auto s = share(simple_module(m->algebra_ptr(), v));
    if (hom_dim(s, m) != hom_dim(s, n) || hom_dim(m, s) != hom_dim(n, s)) {
      out.verdict = IsoVerdict::NotIso;
      out.reason = "hom fingerprint at vertex " + a.vertex_label(v) + " differs";
      return out;
    }
  }
  auto homs = hom_space(m, n);
  if (homs.size() != hom_dim(m, m)) {
    out.verdict = IsoVerdict::NotIso;
    out.reason = "dim Hom(M,N) differs from dim End(M)";
    return out;
  }
  Rng rng = make_rng(seed);
  const Scalar p = a.prime();
  for (std::size_t t = 0; t < trials && !homs.empty(); ++t) {
    Hom f = zero_hom(m, n);
    for (const auto& h : homs) {
      Scalar c = uniform_scalar(rng, p);
      if (!c) continue;
      for (std::size_t v = 0; v < f.maps.size(); ++v) f.maps[v] = f.maps[v] + h.maps[v].scaled(c);
    }
    if (is_isomorphism(f)) {
      out.verdict = IsoVerdict::Iso;
      out.reason = "invertible hom found";
      out.witness = std::move(f);
      return out;
    }
  }
  if (m->is_zero()) {
    out.verdict = IsoVerdict::Iso;
    out.reason = "both zero";
    out.witness = zero_hom(m, n);
    return out;
  }
  out.reason = "no invertible hom in " + std::to_string(trials) + " trials";
  return out;
}

}  // namespace smonkit
