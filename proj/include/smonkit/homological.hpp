#pragma once

// Projective covers, minimal projective resolutions and Ext.
//
// Ext is computed on the cochain complex Hom(P_., N) using
// Hom(P(v_1) + ... + P(v_m), N) = N_{v_1} + ... + N_{v_m}.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "smonkit/module.hpp"

namespace smonkit {

// Lazily computed matrices N_b : N_x -> N_{e(b)} for the basis elements b of P(x).
class PathActions {
 public:
  explicit PathActions(const Module& n) : n_(n), cache_(n.algebra().num_vertices()) {}

  const std::vector<Matrix>& at(std::size_t x) {
    auto& slot = cache_[x];
    if (!slot) {
      const auto& pb = n_.algebra().projective(x);
      std::vector<Matrix> mats;
      mats.reserve(pb.size());
      for (std::size_t b = 0; b < pb.size(); ++b)
        mats.push_back(pb.parent[b] == npos ? Matrix::identity(n_.prime(), n_.dim(x))
                                            : n_.map(pb.via[b]) * mats[pb.parent[b]]);
      slot = std::move(mats);
    }
    return *slot;
  }

 private:
  const Module& n_;
  std::vector<std::optional<std::vector<Matrix>>> cache_;
};

// Images in N of every basis element of P(x) under the map sending e_x to g.
inline std::vector<Vector> element_images(const Module& n, std::size_t x, const Vector& g) {
  const auto& pb = n.algebra().projective(x);
  std::vector<Vector> img(pb.size());
  for (std::size_t b = 0; b < pb.size(); ++b) img[b] = pb.parent[b] == npos ? g : n.map(pb.via[b]) * img[pb.parent[b]];
  return img;
}

// The hom from a projective sum determined by the images of its generators.
inline Hom hom_from_generators(const ProjectiveSum& ps, const ModulePtr& target, const std::vector<Vector>& gens) {
  const Algebra& a = target->algebra();
  if (gens.size() != ps.tops.size()) throw ShapeMismatch("one generator image per summand required");
  std::vector<Matrix> maps;
  for (std::size_t y = 0; y < a.num_vertices(); ++y) maps.emplace_back(a.prime(), target->dim(y), ps.module->dim(y));
  for (std::size_t i = 0; i < ps.tops.size(); ++i) {
    const auto& pb = a.projective(ps.tops[i]);
    if (gens[i].size() != target->dim(ps.tops[i])) throw ShapeMismatch("generator image has the wrong length");
    auto img = element_images(*target, ps.tops[i], gens[i]);
    for (std::size_t b = 0; b < pb.size(); ++b) {
      const std::size_t y = pb.target[b];
      const std::size_t col = ps.offset[i][y] + pb.position[b];
      for (std::size_t r = 0; r < img[b].size(); ++r) maps[y](r, col) = img[b][r];
    }
  }
  return Hom(ps.module, target, std::move(maps));
}

struct ProjectiveCover {
  ProjectiveSum projective;
  std::vector<Vector> generators;  // image of each summand generator
  Hom epi;
};

// Minimal cover: at each vertex the first standard basis vectors completing
// the radical to the whole space become generators. Extra summands listed in
// `padding` are appended and sent to zero.
inline ProjectiveCover projective_cover(const ModulePtr& m, const std::vector<std::size_t>& padding = {}) {
  const Algebra& a = m->algebra();
  const Scalar p = a.prime();
  auto rad = radical_spaces(*m);
  std::vector<std::size_t> tops;
  std::vector<Vector> gens;
  for (std::size_t x = 0; x < a.num_vertices(); ++x) {
    const std::size_t d = m->dim(x);
    if (rad[x].dim() == d) continue;
    Matrix span = rad[x].basis();
    Subspace cur = rad[x];
    for (std::size_t c = 0; c < d && cur.dim() < d; ++c) {
      Vector e(d, 0);
      e[c] = 1;
      if (cur.contains(e)) continue;
      tops.push_back(x);
      gens.push_back(e);
      Matrix row(p, 1, d);
      row(0, c) = 1;
      span = vstack({span, row}, p, d);
      cur = Subspace::span_rows(span);
    }
  }
  for (auto v : padding) {
    tops.push_back(v);
    gens.emplace_back(m->dim(v), 0);
  }
  auto ps = projective_sum(m->algebra_ptr(), tops);
  Hom epi = hom_from_generators(ps, m, gens);
  return {std::move(ps), std::move(gens), std::move(epi)};
}

inline Module syzygy(const ModulePtr& m) { return kernel(projective_cover(m).epi).module; }

struct ResolutionTerm {
  ProjectiveSum projective;
  // Image of each generator: in the module itself for degree 0, otherwise in
  // the previous term (coordinates at the generator's top vertex).
  std::vector<Vector> images;
  Hom map;
};

struct Resolution {
  ModulePtr module;
  std::vector<ResolutionTerm> terms;
  bool complete = false;  // the last computed syzygy is zero
  ModulePtr last_syzygy;

  std::size_t length() const { return terms.size(); }
  // Terms past the computed range are zero only when the resolution is complete.
  bool term_known(std::size_t k) const { return k < terms.size() || complete; }
  const std::vector<std::size_t>* tops(std::size_t k) const {
    return k < terms.size() ? &terms[k].projective.tops : nullptr;
  }
};

struct ResolutionOptions {
  std::vector<std::size_t> padding;  // extra summands for the degree-0 cover
  std::size_t dim_cap = 0;           // abort when a term exceeds this total dimension (0 = no cap)
};

// Terms P_0 .. P_{max_degree}, stopping early when a syzygy vanishes.
inline Resolution resolve(const ModulePtr& m, std::size_t max_degree, const ResolutionOptions& opt = {}) {
  Resolution res;
  res.module = m;
  ModulePtr cur = m;
  Hom incl;  // current syzygy -> previous term
  bool have_incl = false;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    auto cov = projective_cover(cur, k == 0 ? opt.padding : std::vector<std::size_t>{});
    if (opt.dim_cap && cov.projective.module->total_dim() > opt.dim_cap)
      throw LimitExceeded("resolution term " + std::to_string(k) + " exceeds dimension cap");
    ResolutionTerm t;
    if (have_incl) {
      for (std::size_t i = 0; i < cov.generators.size(); ++i)
        t.images.push_back(incl.maps[cov.projective.tops[i]] * cov.generators[i]);
      t.map = hom_from_generators(cov.projective, incl.target, t.images);
    } else {
      t.images = cov.generators;
      t.map = cov.epi;
    }
    t.projective = std::move(cov.projective);
    auto ker = kernel(t.map);
    res.terms.push_back(std::move(t));
    incl = ker.inclusion;
    have_incl = true;
    cur = incl.source;
    if (cur->is_zero()) {
      res.complete = true;
      break;
    }
  }
  res.last_syzygy = cur;
  return res;
}

// Dimension of Hom(P, N) for a projective sum with the given tops.
inline std::size_t cochain_dim(const std::vector<std::size_t>& tops, const Module& n) {
  std::size_t d = 0;
  for (auto t : tops) d += n.dim(t);
  return d;
}

// Matrix of f -> f o g from Hom(P, N) to Hom(S, N), where g sends the
// generator of summand i of S (top src_tops[i]) to images[i] in P.
inline Matrix pullback_matrix(const ProjectiveSum& p, const std::vector<std::size_t>& src_tops,
                              const std::vector<Vector>& images, const Module& n, PathActions& act) {
  const Algebra& a = n.algebra();
  std::vector<std::size_t> row_off{0}, col_off{0};
  for (auto s : src_tops) row_off.push_back(row_off.back() + n.dim(s));
  for (auto t : p.tops) col_off.push_back(col_off.back() + n.dim(t));
  Matrix out(a.prime(), row_off.back(), col_off.back());
  for (std::size_t i = 0; i < src_tops.size(); ++i) {
    const std::size_t v = src_tops[i];
    if (n.dim(v) == 0) continue;
    for (std::size_t j = 0; j < p.tops.size(); ++j) {
      const std::size_t t = p.tops[j];
      if (n.dim(t) == 0) continue;
      const auto& pb = a.projective(t);
      const auto& mats = act.at(t);
      for (std::size_t b : pb.at[v]) {
        Scalar c = images[i][p.offset[j][v] + pb.position[b]];
        if (!c) continue;
        const Matrix& nb = mats[b];
        for (std::size_t r = 0; r < nb.rows(); ++r)
          for (std::size_t q = 0; q < nb.cols(); ++q)
            if (Scalar e = nb(r, q))
              out(row_off[i] + r, col_off[j] + q) =
                  field::add(out(row_off[i] + r, col_off[j] + q), field::mul(c, e, a.prime()), a.prime());
      }
    }
  }
  return out;
}

// The coboundary Hom(P_{k}, N) -> Hom(P_{k+1}, N), or nullopt when P_{k+1} = 0.
inline std::optional<Matrix> coboundary(const Resolution& res, std::size_t k, const Module& n, PathActions& act) {
  if (k + 1 >= res.terms.size()) {
    if (!res.complete) throw Error("resolution too short for the requested degree");
    return std::nullopt;
  }
  return pullback_matrix(res.terms[k].projective, res.terms[k + 1].projective.tops, res.terms[k + 1].images, n, act);
}

// dim Ext^k(M, N) for k = 0 .. max_k, from a resolution of M reaching degree max_k + 1.
inline std::vector<std::size_t> ext_dims(const Resolution& res, const ModulePtr& n, std::size_t max_k) {
  require_same_algebra(res.module->algebra(), n->algebra());
  PathActions act(*n);
  std::vector<std::size_t> out;
  std::size_t prev_rank = 0;
  for (std::size_t k = 0; k <= max_k; ++k) {
    if (k >= res.terms.size()) {
      if (!res.complete) throw Error("resolution too short for the requested degree");
      out.push_back(0);
      continue;
    }
    const std::size_t h = cochain_dim(res.terms[k].projective.tops, *n);
    auto d = coboundary(res, k, *n, act);
    const std::size_t r = d ? rank(*d) : 0;
    out.push_back(h - r - prev_rank);
    prev_rank = r;
  }
  return out;
}

inline std::size_t ext_dim(const ModulePtr& m, const ModulePtr& n, std::size_t k) {
  return ext_dims(resolve(m, k + 1), n, k)[k];
}

// Projective dimension if it is at most `bound`, nullopt otherwise.
inline std::optional<std::size_t> pd_up_to(const ModulePtr& m, std::size_t bound) {
  auto res = resolve(m, bound);
  if (!res.complete) return std::nullopt;
  return res.terms.size() - 1;
}

inline std::string pd_string(const std::optional<std::size_t>& pd, std::size_t bound) {
  return pd ? std::to_string(*pd) : "MORE_THAN(" + std::to_string(bound) + ")";
}

// A chain map between resolutions lifting f: M -> M'. Entry [k][i] is the
// image of generator i of P_k in P'_k.
using ChainMap = std::vector<std::vector<Vector>>;

inline ChainMap lift_chain_map(const Resolution& src, const Resolution& tgt, const Hom& f, std::size_t max_degree) {
  ChainMap out;
  for (std::size_t k = 0; k <= max_degree && k < src.terms.size(); ++k) {
    const auto& st = src.terms[k];
    std::vector<Vector> imgs;
    if (k >= tgt.terms.size()) {
      if (!tgt.complete) throw Error("target resolution too short");
      for (std::size_t i = 0; i < st.projective.tops.size(); ++i) imgs.emplace_back();
      out.push_back(std::move(imgs));
      continue;
    }
    const auto& tt = tgt.terms[k];
    std::optional<Hom> prev;
    if (k > 0 && k - 1 < tgt.terms.size())
      prev = hom_from_generators(src.terms[k - 1].projective, tgt.terms[k - 1].projective.module, out[k - 1]);
    for (std::size_t i = 0; i < st.projective.tops.size(); ++i) {
      const std::size_t v = st.projective.tops[i];
      Vector rhs = k == 0 ? f.maps[v] * st.images[i] : prev->maps[v] * st.images[i];
      auto sol = solve(tt.map.maps[v], rhs);
      if (!sol) throw Error("chain map lift failed at degree " + std::to_string(k));
      imgs.push_back(std::move(*sol));
    }
    out.push_back(std::move(imgs));
  }
  return out;
}

struct InducedExt {
  std::size_t source_dim = 0;  // dim Ext^k(M', N)
  std::size_t target_dim = 0;  // dim Ext^k(M, N)
  std::size_t rank = 0;        // rank of Ext^k(f, N): Ext^k(M', N) -> Ext^k(M, N)
  bool bijective() const { return source_dim == target_dim && rank == source_dim; }
  bool surjective() const { return rank == target_dim; }
};

// Ext^k(f, N) for f: M -> M', with `chain` lifting f from `src` (resolving M)
// to `tgt` (resolving M'). Both resolutions must reach degree k + 1.
inline InducedExt induced_ext(const Resolution& src, const Resolution& tgt, const ChainMap& chain, const ModulePtr& n,
                              std::size_t k) {
  PathActions act(*n);
  const Scalar p = n->prime();
  InducedExt out;
  auto cocycles = [&](const Resolution& r) {
    const std::size_t h = k < r.terms.size() ? cochain_dim(r.terms[k].projective.tops, *n) : 0;
    if (h == 0) return Subspace(p, 0);
    auto d = coboundary(r, k, *n, act);
    return d ? kernel_basis(*d) : Subspace::full(p, h);
  };
  auto coboundaries = [&](const Resolution& r) {
    const std::size_t h = k < r.terms.size() ? cochain_dim(r.terms[k].projective.tops, *n) : 0;
    if (k == 0 || h == 0) return Subspace(p, h);
    auto d = coboundary(r, k - 1, *n, act);
    return image_basis(*d);
  };
  Subspace zt = cocycles(tgt), bt = coboundaries(tgt);
  Subspace zs = cocycles(src), bs = coboundaries(src);
  out.source_dim = zt.dim() - bt.dim();
  out.target_dim = zs.dim() - bs.dim();
  if (k >= src.terms.size() || k >= tgt.terms.size() || zt.dim() == 0 || zs.ambient() == 0) return out;
  Matrix fstar = pullback_matrix(tgt.terms[k].projective, src.terms[k].projective.tops, chain[k], *n, act);
  Matrix img = fstar * zt.basis_columns();
  Subspace sum = subspace_sum({image_basis(img), bs});
  out.rank = sum.dim() - bs.dim();
  return out;
}

}  // namespace smonkit
