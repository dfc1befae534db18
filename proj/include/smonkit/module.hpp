#pragma once

// Finite-dimensional modules over an Algebra, viewed as quiver representations:
// one vector space F_p^{d_x} per vertex and one matrix per arrow. Homomorphisms
// carry one matrix per vertex.

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "smonkit/algebra.hpp"
#include "smonkit/exactla.hpp"

namespace smonkit {

class Module {
 public:
  Module() = default;
  Module(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> maps)
      : alg_(std::move(alg)), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (!alg_) throw Error("module without algebra");
    if (dims_.size() != alg_->num_vertices()) throw ShapeMismatch("dimension vector has wrong length");
    if (maps_.size() != alg_->num_arrows()) throw ShapeMismatch("wrong number of arrow matrices");
    for (std::size_t g = 0; g < maps_.size(); ++g) {
      const auto& ar = alg_->arrow(g);
      if (maps_[g].rows() != dims_[ar.target] || maps_[g].cols() != dims_[ar.source])
        throw ShapeMismatch("arrow " + ar.name + " has matrix shape " + std::to_string(maps_[g].rows()) + "x" +
                            std::to_string(maps_[g].cols()) + ", expected " + std::to_string(dims_[ar.target]) +
                            "x" + std::to_string(dims_[ar.source]));
      if (maps_[g].prime() != alg_->prime()) throw PrimeMismatch("arrow matrix over the wrong field");
    }
  }

  static Module zero(AlgebraPtr alg) {
    std::vector<std::size_t> dims(alg->num_vertices(), 0);
    std::vector<Matrix> maps;
    for (const auto& ar : alg->arrows()) maps.emplace_back(alg->prime(), dims[ar.target], dims[ar.source]);
    return Module(std::move(alg), std::move(dims), std::move(maps));
  }

  const Algebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  Scalar prime() const { return alg_->prime(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t x) const { return dims_.at(x); }
  std::size_t total_dim() const {
    std::size_t t = 0;
    for (auto d : dims_) t += d;
    return t;
  }
  bool is_zero() const { return total_dim() == 0; }
  const Matrix& map(std::size_t g) const { return maps_.at(g); }
  const std::vector<Matrix>& maps() const { return maps_; }

  bool operator==(const Module& o) const { return *alg_ == *o.alg_ && dims_ == o.dims_ && maps_ == o.maps_; }

 private:
  AlgebraPtr alg_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
};

using ModulePtr = std::shared_ptr<const Module>;

inline ModulePtr share(Module m) { return std::make_shared<const Module>(std::move(m)); }

// Names of the relations the module violates (empty when valid).
inline std::vector<std::string> check_module(const Module& m) {
  std::vector<std::string> bad;
  const Algebra& a = m.algebra();
  auto composite = [&](const std::vector<std::size_t>& arrows) {
    std::size_t src = a.arrow(arrows.front()).source;
    Matrix c = Matrix::identity(m.prime(), m.dim(src));
    for (auto g : arrows) c = m.map(g) * c;
    return c;
  };
  for (const auto& r : a.relations()) {
    Matrix lhs = composite(r.lhs);
    if (r.commutativity() ? !(lhs == composite(r.rhs)) : !lhs.is_zero()) bad.push_back(r.name);
  }
  return bad;
}

inline void require_valid(const Module& m) {
  auto bad = check_module(m);
  if (bad.empty()) return;
  std::string s;
  for (const auto& b : bad) s += (s.empty() ? "" : ", ") + b;
  throw InvalidModule("relations violated: " + s);
}

struct Hom {
  ModulePtr source;
  ModulePtr target;
  std::vector<Matrix> maps;  // per vertex, dim target x dim source

  Hom() = default;
  Hom(ModulePtr s, ModulePtr t, std::vector<Matrix> m) : source(std::move(s)), target(std::move(t)), maps(std::move(m)) {
    require_same_algebra(source->algebra(), target->algebra());
    if (maps.size() != source->dims().size()) throw ShapeMismatch("hom needs one matrix per vertex");
    for (std::size_t x = 0; x < maps.size(); ++x)
      if (maps[x].rows() != target->dim(x) || maps[x].cols() != source->dim(x))
        throw ShapeMismatch("hom component at vertex " + std::to_string(x + 1) + " has the wrong shape");
  }

  const Algebra& algebra() const { return source->algebra(); }
  bool is_zero() const {
    for (const auto& m : maps)
      if (!m.is_zero()) return false;
    return true;
  }
};

inline Hom zero_hom(ModulePtr s, ModulePtr t) {
  std::vector<Matrix> maps;
  for (std::size_t x = 0; x < s->dims().size(); ++x) maps.emplace_back(s->prime(), t->dim(x), s->dim(x));
  return Hom(std::move(s), std::move(t), std::move(maps));
}

inline Hom identity_hom(ModulePtr m) {
  std::vector<Matrix> maps;
  for (auto d : m->dims()) maps.push_back(Matrix::identity(m->prime(), d));
  return Hom(m, m, std::move(maps));
}

// g o f.
inline Hom compose(const Hom& g, const Hom& f) {
  if (!(*f.target == *g.source)) throw AlgebraMismatch("composition of non-composable homs");
  std::vector<Matrix> maps;
  for (std::size_t x = 0; x < f.maps.size(); ++x) maps.push_back(g.maps[x] * f.maps[x]);
  return Hom(f.source, g.target, std::move(maps));
}

// Y_a f_{s(a)} = f_{e(a)} X_a for every arrow a.
inline bool is_natural(const Hom& f) {
  const Algebra& a = f.algebra();
  for (std::size_t g = 0; g < a.num_arrows(); ++g) {
    const auto& ar = a.arrow(g);
    if (!(f.target->map(g) * f.maps[ar.source] == f.maps[ar.target] * f.source->map(g))) return false;
  }
  return true;
}

inline std::size_t hom_rank(const Hom& f) {
  std::size_t r = 0;
  for (const auto& m : f.maps) r += rank(m);
  return r;
}
inline bool is_injective(const Hom& f) { return hom_rank(f) == f.source->total_dim(); }
inline bool is_surjective(const Hom& f) { return hom_rank(f) == f.target->total_dim(); }
inline bool is_isomorphism(const Hom& f) { return is_injective(f) && is_surjective(f); }

// Basis of Hom(M, N): the solution space of the naturality equations.
inline std::vector<Hom> hom_space(const ModulePtr& m, const ModulePtr& n) {
  require_same_algebra(m->algebra(), n->algebra());
  const Algebra& a = m->algebra();
  const Scalar p = a.prime();
  std::vector<std::size_t> off(a.num_vertices() + 1, 0);
  for (std::size_t x = 0; x < a.num_vertices(); ++x) off[x + 1] = off[x] + n->dim(x) * m->dim(x);
  const std::size_t unknowns = off.back();
  std::size_t eqs = 0;
  for (const auto& ar : a.arrows()) eqs += n->dim(ar.target) * m->dim(ar.source);
  Matrix sys(p, eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t g = 0; g < a.num_arrows(); ++g) {
    const auto& ar = a.arrow(g);
    const std::size_t y = ar.source, z = ar.target;
    const Matrix& ng = n->map(g);
    const Matrix& mg = m->map(g);
    const std::size_t dy = m->dim(y), dz = m->dim(z), ey = n->dim(y), ez = n->dim(z);
    // (N_g f_y - f_z M_g)[r][c]
    for (std::size_t r = 0; r < ez; ++r)
      for (std::size_t c = 0; c < dy; ++c, ++row) {
        for (std::size_t k = 0; k < ey; ++k)
          if (Scalar v = ng(r, k)) sys(row, off[y] + k * dy + c) = field::add(sys(row, off[y] + k * dy + c), v, p);
        for (std::size_t k = 0; k < dz; ++k)
          if (Scalar v = mg(k, c))
            sys(row, off[z] + r * dz + k) = field::sub(sys(row, off[z] + r * dz + k), v, p);
      }
  }
  Subspace ker = kernel_basis(sys);
  std::vector<Hom> out;
  for (std::size_t i = 0; i < ker.dim(); ++i) {
    std::vector<Matrix> maps;
    for (std::size_t x = 0; x < a.num_vertices(); ++x) {
      Matrix fx(p, n->dim(x), m->dim(x));
      for (std::size_t r = 0; r < n->dim(x); ++r)
        for (std::size_t c = 0; c < m->dim(x); ++c) fx(r, c) = ker.basis()(i, off[x] + r * m->dim(x) + c);
      maps.push_back(std::move(fx));
    }
    out.emplace_back(m, n, std::move(maps));
  }
  return out;
}

inline std::size_t hom_dim(const ModulePtr& m, const ModulePtr& n) { return hom_space(m, n).size(); }

// Flattens a hom into one vector (vertex blocks, row-major).
inline Vector flatten(const Hom& f) {
  Vector v;
  for (const auto& m : f.maps) v.insert(v.end(), m.data().begin(), m.data().end());
  return v;
}

struct SubmoduleResult {
  Module module;
  Hom inclusion;
};

struct QuotientResult {
  Module module;
  Hom projection;
};

// Submodule cut out by vertexwise subspaces (which must be arrow-stable).
inline SubmoduleResult restrict_to(const ModulePtr& m, const std::vector<Subspace>& sub) {
  const Algebra& a = m->algebra();
  const Scalar p = a.prime();
  std::vector<std::size_t> dims;
  std::vector<Matrix> incl;
  for (std::size_t x = 0; x < a.num_vertices(); ++x) {
    dims.push_back(sub[x].dim());
    incl.push_back(sub[x].basis_columns());
  }
  std::vector<Matrix> maps;
  for (std::size_t g = 0; g < a.num_arrows(); ++g) {
    const auto& ar = a.arrow(g);
    Matrix img = m->map(g) * incl[ar.source];
    Matrix induced(p, dims[ar.target], dims[ar.source]);
    const auto& piv = sub[ar.target].pivots();
    for (std::size_t c = 0; c < img.cols(); ++c) {
      Vector v = img.col(c);
      if (!sub[ar.target].contains(v)) throw Error("subspaces are not stable under arrow " + ar.name);
      for (std::size_t i = 0; i < piv.size(); ++i) induced(i, c) = v[piv[i]];
    }
    maps.push_back(std::move(induced));
  }
  auto sm = share(Module(m->algebra_ptr(), dims, std::move(maps)));
  return {*sm, Hom(sm, m, std::move(incl))};
}

// Quotient by vertexwise arrow-stable subspaces. The quotient basis is given
// by the non-pivot coordinates of each subspace.
inline QuotientResult quotient_by(const ModulePtr& m, const std::vector<Subspace>& sub) {
  const Algebra& a = m->algebra();
  const Scalar p = a.prime();
  std::vector<std::size_t> dims;
  std::vector<Matrix> proj, section;
  for (std::size_t x = 0; x < a.num_vertices(); ++x) {
    const Subspace& s = sub[x];
    const std::size_t d = m->dim(x);
    std::vector<bool> piv(d, false);
    for (auto c : s.pivots()) piv[c] = true;
    std::vector<std::size_t> rest;
    for (std::size_t c = 0; c < d; ++c)
      if (!piv[c]) rest.push_back(c);
    Matrix q(p, rest.size(), d), sec(p, d, rest.size());
    for (std::size_t j = 0; j < rest.size(); ++j) {
      q(j, rest[j]) = 1;
      sec(rest[j], j) = 1;
      for (std::size_t i = 0; i < s.dim(); ++i) q(j, s.pivots()[i]) = field::neg(s.basis()(i, rest[j]), p);
    }
    dims.push_back(rest.size());
    proj.push_back(std::move(q));
    section.push_back(std::move(sec));
  }
  std::vector<Matrix> maps;
  for (std::size_t g = 0; g < a.num_arrows(); ++g) {
    const auto& ar = a.arrow(g);
    maps.push_back(proj[ar.target] * m->map(g) * section[ar.source]);
  }
  auto qm = share(Module(m->algebra_ptr(), dims, std::move(maps)));
  return {*qm, Hom(m, qm, std::move(proj))};
}

inline std::vector<Subspace> kernel_spaces(const Hom& f) {
  std::vector<Subspace> k;
  for (const auto& m : f.maps) k.push_back(kernel_basis(m));
  return k;
}
inline std::vector<Subspace> image_spaces(const Hom& f) {
  std::vector<Subspace> im;
  for (const auto& m : f.maps) im.push_back(image_basis(m));
  return im;
}

inline SubmoduleResult kernel(const Hom& f) { return restrict_to(f.source, kernel_spaces(f)); }
inline QuotientResult cokernel(const Hom& f) { return quotient_by(f.target, image_spaces(f)); }

struct ImageResult {
  Module module;
  Hom inclusion;  // Im f -> target
  Hom onto;       // source -> Im f
};

inline ImageResult image(const Hom& f) {
  auto sub = restrict_to(f.target, image_spaces(f));
  auto im = sub.inclusion.source;
  std::vector<Matrix> onto;
  for (std::size_t x = 0; x < f.maps.size(); ++x) {
    const Matrix& fx = f.maps[x];
    const auto& piv = image_basis(fx).pivots();
    Matrix c(f.source->prime(), piv.size(), fx.cols());
    for (std::size_t j = 0; j < fx.cols(); ++j)
      for (std::size_t i = 0; i < piv.size(); ++i) c(i, j) = fx(piv[i], j);
    onto.push_back(std::move(c));
  }
  return {*im, sub.inclusion, Hom(f.source, im, std::move(onto))};
}

inline Module direct_sum(const AlgebraPtr& alg, const std::vector<Module>& parts) {
  std::vector<std::size_t> dims(alg->num_vertices(), 0);
  for (const auto& m : parts) {
    require_same_algebra(*alg, m.algebra());
    for (std::size_t x = 0; x < dims.size(); ++x) dims[x] += m.dim(x);
  }
  std::vector<Matrix> maps;
  for (std::size_t g = 0; g < alg->num_arrows(); ++g) {
    std::vector<Matrix> blocks;
    for (const auto& m : parts) blocks.push_back(m.map(g));
    maps.push_back(smonkit::direct_sum(blocks, alg->prime()));
  }
  return Module(alg, std::move(dims), std::move(maps));
}

// (f_1, ..., f_k): S_1 + ... + S_k -> T for homs with a common target.
inline Hom hom_from_sum(const std::vector<Hom>& fs, const ModulePtr& target) {
  std::vector<Module> srcs;
  for (const auto& f : fs) srcs.push_back(*f.source);
  auto sum = share(direct_sum(target->algebra_ptr(), srcs));
  std::vector<Matrix> maps;
  for (std::size_t x = 0; x < target->dims().size(); ++x) {
    std::vector<Matrix> parts;
    for (const auto& f : fs) parts.push_back(f.maps[x]);
    maps.push_back(hstack(parts, target->prime(), target->dim(x)));
  }
  return Hom(sum, target, std::move(maps));
}

// (f_1; ...; f_k): S -> T_1 + ... + T_k for homs with a common source.
inline Hom hom_into_sum(const std::vector<Hom>& fs, const ModulePtr& source) {
  std::vector<Module> tgts;
  for (const auto& f : fs) tgts.push_back(*f.target);
  auto sum = share(direct_sum(source->algebra_ptr(), tgts));
  std::vector<Matrix> maps;
  for (std::size_t x = 0; x < source->dims().size(); ++x) {
    std::vector<Matrix> parts;
    for (const auto& f : fs) parts.push_back(f.maps[x]);
    maps.push_back(vstack(parts, source->prime(), source->dim(x)));
  }
  return Hom(source, sum, std::move(maps));
}

inline Hom hom_direct_sum(const std::vector<Hom>& fs) {
  if (fs.empty()) throw Error("empty hom sum");
  const AlgebraPtr& alg = fs.front().source->algebra_ptr();
  std::vector<Module> s, t;
  for (const auto& f : fs) {
    s.push_back(*f.source);
    t.push_back(*f.target);
  }
  std::vector<Matrix> maps;
  for (std::size_t x = 0; x < alg->num_vertices(); ++x) {
    std::vector<Matrix> blocks;
    for (const auto& f : fs) blocks.push_back(f.maps[x]);
    maps.push_back(smonkit::direct_sum(blocks, alg->prime()));
  }
  return Hom(share(direct_sum(alg, s)), share(direct_sum(alg, t)), std::move(maps));
}

inline Module simple_module(const AlgebraPtr& alg, std::size_t x) {
  std::vector<std::size_t> dims(alg->num_vertices(), 0);
  dims.at(x) = 1;
  std::vector<Matrix> maps;
  for (const auto& ar : alg->arrows()) maps.emplace_back(alg->prime(), dims[ar.target], dims[ar.source]);
  return Module(alg, std::move(dims), std::move(maps));
}

// Direct sum of indecomposable projectives with the explicit path-tuple basis.
// At vertex y, summand i occupies rows offset[i][y] .. offset[i][y] + |P(tops[i])_y|.
struct ProjectiveSum {
  std::vector<std::size_t> tops;
  std::vector<std::vector<std::size_t>> offset;
  ModulePtr module;

  // Coordinate (at vertex tops[i]) of the generator e of summand i.
  std::size_t generator_position(std::size_t i) const {
    return offset[i][tops[i]];  // e_x is element 0 and the first element ending at x
  }
};

inline ProjectiveSum projective_sum(const AlgebraPtr& alg, std::vector<std::size_t> tops) {
  const Algebra& a = *alg;
  ProjectiveSum ps;
  ps.tops = std::move(tops);
  std::vector<std::size_t> dims(a.num_vertices(), 0);
  for (auto t : ps.tops) {
    const auto& pb = a.projective(t);
    std::vector<std::size_t> off(a.num_vertices());
    for (std::size_t y = 0; y < a.num_vertices(); ++y) {
      off[y] = dims[y];
      dims[y] += pb.at[y].size();
    }
    ps.offset.push_back(std::move(off));
  }
  std::vector<Matrix> maps;
  for (std::size_t g = 0; g < a.num_arrows(); ++g) {
    const auto& ar = a.arrow(g);
    Matrix m(a.prime(), dims[ar.target], dims[ar.source]);
    for (std::size_t i = 0; i < ps.tops.size(); ++i) {
      const auto& pb = a.projective(ps.tops[i]);
      for (std::size_t b : pb.at[ar.source]) {
        std::size_t nb = a.act_left(ps.tops[i], b, g);
        if (nb == npos) continue;
        m(ps.offset[i][ar.target] + pb.position[nb], ps.offset[i][ar.source] + pb.position[b]) = 1;
      }
    }
    maps.push_back(std::move(m));
  }
  ps.module = share(Module(alg, std::move(dims), std::move(maps)));
  return ps;
}

inline Module projective_module(const AlgebraPtr& alg, std::size_t x) { return *projective_sum(alg, {x}).module; }

// The left regular module B = P(1) + ... + P(n).
inline ProjectiveSum regular_module(const AlgebraPtr& alg) {
  std::vector<std::size_t> tops(alg->num_vertices());
  for (std::size_t x = 0; x < tops.size(); ++x) tops[x] = x;
  return projective_sum(alg, std::move(tops));
}

// Vector-space dual over the opposite algebra: same dimension vector,
// transposed matrices on reversed arrows.
inline Module dual(const Module& m) {
  const Algebra& a = m.algebra();
  AlgebraPtr op = a.opposite();
  std::vector<Matrix> maps;
  for (std::size_t g = 0; g < op->num_arrows(); ++g) {
    const auto& oar = op->arrow(g);
    // The opposite arrow runs x' -> x; the original runs x -> x'.
    std::size_t orig = a.arrow_at(oar.factor, oar.arrow, oar.target);
    maps.push_back(m.map(orig).transpose());
  }
  return Module(op, m.dims(), std::move(maps));
}

inline Hom dual(const Hom& f) {
  auto s = share(dual(*f.target));
  auto t = share(dual(*f.source));
  std::vector<Matrix> maps;
  for (const auto& m : f.maps) maps.push_back(m.transpose());
  return Hom(s, t, std::move(maps));
}

inline Module injective_module(const AlgebraPtr& alg, std::size_t x) {
  return dual(projective_module(alg->opposite(), x));
}

// D(B^op): the direct sum of all indecomposable injectives.
inline Module injective_cogenerator(const AlgebraPtr& alg) {
  return dual(*regular_module(alg->opposite()).module);
}

inline std::vector<Module> simples(const AlgebraPtr& alg) {
  std::vector<Module> out;
  for (std::size_t x = 0; x < alg->num_vertices(); ++x) out.push_back(simple_module(alg, x));
  return out;
}
inline std::vector<Module> projectives(const AlgebraPtr& alg) {
  std::vector<Module> out;
  for (std::size_t x = 0; x < alg->num_vertices(); ++x) out.push_back(projective_module(alg, x));
  return out;
}
inline std::vector<Module> injectives(const AlgebraPtr& alg) {
  std::vector<Module> out;
  for (std::size_t x = 0; x < alg->num_vertices(); ++x) out.push_back(injective_module(alg, x));
  return out;
}

// rad M at x is the sum of the images of arrows ending at x.
inline std::vector<Subspace> radical_spaces(const Module& m) {
  const Algebra& a = m.algebra();
  std::vector<Subspace> rad;
  for (std::size_t x = 0; x < a.num_vertices(); ++x) {
    std::vector<Subspace> parts{Subspace(m.prime(), m.dim(x))};
    for (auto g : a.incoming(x)) parts.push_back(image_basis(m.map(g)));
    rad.push_back(subspace_sum(parts));
  }
  return rad;
}

inline SubmoduleResult radical(const ModulePtr& m) { return restrict_to(m, radical_spaces(*m)); }
inline QuotientResult top(const ModulePtr& m) { return quotient_by(m, radical_spaces(*m)); }

// Socle: vectors killed by every outgoing arrow.
inline std::vector<Subspace> socle_spaces(const Module& m) {
  const Algebra& a = m.algebra();
  std::vector<Subspace> soc;
  for (std::size_t x = 0; x < a.num_vertices(); ++x) {
    std::vector<Matrix> rows;
    for (auto g : a.outgoing(x)) rows.push_back(m.map(g));
    std::size_t total = 0;
    for (const auto& r : rows) total += r.rows();
    soc.push_back(kernel_basis(vstack(rows, m.prime(), m.dim(x))));
    (void)total;
  }
  return soc;
}

}  // namespace smonkit
