#pragma once

// The functor (-)* = Hom(-, B) to right modules (modules over the opposite
// algebra), the evaluation map M -> M**, and left proj-approximations.

#include <cstddef>
#include <vector>

#include "smonkit/homological.hpp"
#include "smonkit/module.hpp"

namespace smonkit {

struct StarResult {
  Module module;                       // over the opposite algebra
  std::vector<std::vector<Hom>> basis;  // basis[v]: homs M -> P(v) spanning M*_v
};

namespace detail {

// Right multiplication by the arrow g: v -> w as a hom P(w) -> P(v).
inline Hom right_multiplication(const AlgebraPtr& alg, const std::vector<ModulePtr>& proj, std::size_t g) {
  const Algebra& a = *alg;
  const auto& ar = a.arrow(g);
  const std::size_t v = ar.source, w = ar.target;
  const auto& pw = a.projective(w);
  const auto& pv = a.projective(v);
  std::vector<Matrix> maps;
  for (std::size_t y = 0; y < a.num_vertices(); ++y) maps.emplace_back(a.prime(), proj[v]->dim(y), proj[w]->dim(y));
  for (std::size_t b = 0; b < pw.size(); ++b) {
    std::size_t nb = a.act_right(w, b, g);
    if (nb == npos) continue;
    maps[pw.target[b]](pv.position[nb], pw.position[b]) = 1;
  }
  return Hom(proj[w], proj[v], std::move(maps));
}

// Coordinates of h in a basis whose flattened vectors are rows of an echelon form.
inline Vector hom_coordinates(const Subspace& space, const Hom& h) {
  Vector v = flatten(h);
  if (!space.contains(v)) throw Error("hom is outside the spanned space");
  return space.coordinates(v);
}

inline Subspace span_of(const std::vector<Hom>& homs, Scalar p, std::size_t ambient) {
  Matrix rows(p, homs.size(), ambient);
  for (std::size_t i = 0; i < homs.size(); ++i) {
    Vector v = flatten(homs[i]);
    for (std::size_t j = 0; j < ambient; ++j) rows(i, j) = v[j];
  }
  return Subspace::span_rows(rows);
}

inline std::size_t flat_size(const Module& s, const Module& t) {
  std::size_t n = 0;
  for (std::size_t x = 0; x < s.dims().size(); ++x) n += s.dim(x) * t.dim(x);
  return n;
}

}  // namespace detail

inline StarResult star(const ModulePtr& m) {
  const AlgebraPtr& alg = m->algebra_ptr();
  const Algebra& a = *alg;
  AlgebraPtr op = a.opposite();
  std::vector<ModulePtr> proj;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) proj.push_back(share(projective_module(alg, v)));
  StarResult out;
  std::vector<Subspace> spaces;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    out.basis.push_back(hom_space(m, proj[v]));
    spaces.push_back(detail::span_of(out.basis.back(), a.prime(), detail::flat_size(*m, *proj[v])));
    dims.push_back(out.basis.back().size());
  }
  std::vector<Matrix> maps;
  for (std::size_t og = 0; og < op->num_arrows(); ++og) {
    const auto& oar = op->arrow(og);
    // op arrow w -> v comes from the arrow g: v -> w.
    const std::size_t w = oar.source, v = oar.target;
    const std::size_t g = a.arrow_at(oar.factor, oar.arrow, v);
    Hom rho = detail::right_multiplication(alg, proj, g);
    Matrix mat(a.prime(), dims[v], dims[w]);
    for (std::size_t i = 0; i < dims[w]; ++i) {
      Vector c = detail::hom_coordinates(spaces[v], compose(rho, out.basis[w][i]));
      for (std::size_t r = 0; r < c.size(); ++r) mat(r, i) = c[r];
    }
    maps.push_back(std::move(mat));
  }
  out.module = Module(op, std::move(dims), std::move(maps));
  return out;
}

// ev: M -> M**, ev(m)(f) = f(m). The result lives over the algebra of M.
inline Hom eval_map(const ModulePtr& m) {
  const AlgebraPtr& alg = m->algebra_ptr();
  const Algebra& a = *alg;
  const Scalar p = a.prime();
  AlgebraPtr op = a.opposite();
  StarResult s1 = star(m);
  auto ms = share(s1.module);
  StarResult s2 = star(ms);
  auto mss = share(Module(alg, s2.module.dims(), s2.module.maps()));
  std::vector<ModulePtr> opproj;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) opproj.push_back(share(projective_module(op, v)));
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    Subspace space = detail::span_of(s2.basis[v], p, detail::flat_size(*ms, *opproj[v]));
    Matrix ev(p, mss->dim(v), m->dim(v));
    // opposite element index for every element of P(x) ending at v
    for (std::size_t c = 0; c < m->dim(v); ++c) {
      Vector e(m->dim(v), 0);
      e[c] = 1;
      std::vector<Matrix> comp;
      for (std::size_t x = 0; x < a.num_vertices(); ++x) {
        const auto& pb = a.projective(x);
        const auto& opb = op->projective(v);
        Matrix cx(p, opproj[v]->dim(x), ms->dim(x));
        for (std::size_t i = 0; i < s1.basis[x].size(); ++i) {
          Vector val = s1.basis[x][i].maps[v] * e;  // f_i(e) in P(x)_v
          for (std::size_t k = 0; k < pb.at[v].size(); ++k) {
            if (!val[k]) continue;
            std::size_t ob = a.opposite_element(x, pb.at[v][k]);
            cx(opb.position[ob], i) = val[k];
          }
        }
        comp.push_back(std::move(cx));
      }
      Hom evm(ms, opproj[v], std::move(comp));
      Vector coords = detail::hom_coordinates(space, evm);
      for (std::size_t r = 0; r < coords.size(); ++r) ev(r, c) = coords[r];
    }
    maps.push_back(std::move(ev));
  }
  return Hom(m, mss, std::move(maps));
}

inline bool is_torsionless(const ModulePtr& m) { return m->is_zero() || is_injective(eval_map(m)); }
inline bool is_reflexive(const ModulePtr& m) { return m->is_zero() || is_isomorphism(eval_map(m)); }

// Left proj-approximation M -> P(t_1) + ... + P(t_r), m -> (f_j(m))_j, where
// f_j are the generators of a projective cover of M* over the opposite algebra.
inline Hom left_proj_approx(const ModulePtr& m) {
  const AlgebraPtr& alg = m->algebra_ptr();
  StarResult s = star(m);
  auto ms = share(s.module);
  auto cov = projective_cover(ms);
  std::vector<Hom> comps;
  for (std::size_t j = 0; j < cov.projective.tops.size(); ++j) {
    const std::size_t t = cov.projective.tops[j];
    const Vector& g = cov.generators[j];
    auto pt = s.basis[t].empty() ? share(projective_module(alg, t)) : s.basis[t].front().target;
    Hom f = zero_hom(m, pt);
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i])
        for (std::size_t x = 0; x < f.maps.size(); ++x) f.maps[x] = f.maps[x] + s.basis[t][i].maps[x].scaled(g[i]);
    comps.push_back(std::move(f));
  }
  if (comps.empty()) return zero_hom(m, share(Module::zero(alg)));
  return hom_into_sum(comps, m);
}

}  // namespace smonkit
