#pragma once

// Nakayama algebras: enumeration of indecomposables, the Gorenstein core and
// bounded evidence for (non-)Gorensteinness.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "smonkit/certificate.hpp"
#include "smonkit/random.hpp"

namespace smonkit {

struct NakayamaAlgebra {
  AlgebraPtr algebra;
  std::vector<std::size_t> kupisch;  // length of P(v)
};

// Accepts a single monomial factor whose vertices have at most one incoming
// and at most one outgoing arrow.
inline NakayamaAlgebra make_nakayama(const AlgebraPtr& a) {
  if (a->num_factors() != 1) throw NotNakayama("tensor algebras are not handled as Nakayama algebras");
  for (std::size_t v = 0; v < a->num_vertices(); ++v)
    if (a->incoming(v).size() > 1 || a->outgoing(v).size() > 1)
      throw NotNakayama("vertex " + a->vertex_label(v) + " has more than one incoming or outgoing arrow");
  NakayamaAlgebra n{a, {}};
  for (std::size_t v = 0; v < a->num_vertices(); ++v) n.kupisch.push_back(a->projective(v).size());
  return n;
}

struct NakayamaModule {
  std::size_t top = 0;
  std::size_t length = 0;
  ModulePtr module;
};

// P(v) modulo the paths of length >= len.
inline Module nakayama_quotient(const AlgebraPtr& a, std::size_t v, std::size_t len) {
  auto p = share(projective_module(a, v));
  const auto& pb = a->projective(v);
  const auto& bq = a->factor(0);
  std::vector<Subspace> sub;
  for (std::size_t y = 0; y < a->num_vertices(); ++y) {
    Matrix rows(a->prime(), 0, p->dim(y));
    std::vector<Matrix> parts{rows};
    for (std::size_t b : pb.at[y]) {
      if (bq.path(bq.paths_from(v)[pb.tuple[b][0]]).length() < len) continue;
      Matrix r(a->prime(), 1, p->dim(y));
      r(0, pb.position[b]) = 1;
      parts.push_back(std::move(r));
    }
    sub.push_back(Subspace::span_rows(vstack(parts, a->prime(), p->dim(y))));
  }
  return quotient_by(p, sub).module;
}

// Every indecomposable: the quotients of each P(v) of length 1 .. len P(v).
inline std::vector<NakayamaModule> enumerate_nakayama(const NakayamaAlgebra& n) {
  std::vector<NakayamaModule> out;
  for (std::size_t v = 0; v < n.algebra->num_vertices(); ++v)
    for (std::size_t len = 1; len <= n.kupisch[v]; ++len)
      out.push_back({v, len, share(nakayama_quotient(n.algebra, v, len))});
  return out;
}

// Position of the indecomposable with the given top and length, or npos.
inline std::size_t find_indecomposable(const NakayamaAlgebra& n, std::size_t top, std::size_t length) {
  std::size_t idx = 0;
  for (std::size_t v = 0; v < n.kupisch.size(); ++v) {
    if (v == top) return length >= 1 && length <= n.kupisch[v] ? idx + length - 1 : npos;
    idx += n.kupisch[v];
  }
  return npos;
}

// Top vertex of a uniserial module (npos when the top is not simple).
inline std::size_t simple_top(const ModulePtr& m) {
  auto t = top(m).module;
  if (t.total_dim() != 1) return npos;
  for (std::size_t v = 0; v < t.dims().size(); ++v)
    if (t.dim(v)) return v;
  return npos;
}

struct CoreEntry {
  std::size_t index = 0;  // into the enumeration
  std::size_t top = 0;
  std::size_t length = 0;
  std::vector<std::size_t> orbit;  // enumeration indices of the syzygy orbit until it repeats
  std::size_t period = 0;
};

struct CoreReport {
  std::size_t bound = 0;
  std::size_t indecomposables = 0;
  std::vector<Certificate> gp;       // per indecomposable
  std::vector<Certificate> semi_gp;  // per indecomposable
  std::vector<bool> projective;
  std::vector<CoreEntry> non_projective_gp;
  std::vector<std::size_t> cover_tops;  // distinct tops of the projective covers
  std::vector<std::string> problems;    // invariant violations found along the way

  std::size_t core_size() const { return non_projective_gp.size() + cover_tops.size(); }
};

inline CoreReport gorenstein_core(const NakayamaAlgebra& n, std::size_t bound) {
  CoreReport r;
  r.bound = bound;
  auto mods = enumerate_nakayama(n);
  r.indecomposables = mods.size();
  for (std::size_t i = 0; i < mods.size(); ++i) {
    const auto& m = mods[i];
    r.projective.push_back(m.length == n.kupisch[m.top]);
    r.semi_gp.push_back(semi_gp_cert(m.module, bound));
    r.gp.push_back(gp_cert(m.module, bound));
    if (r.gp.back().certified() && r.semi_gp.back().refuted()) r.problems.push_back("gp certified but semi-gp refuted");
  }
  for (std::size_t i = 0; i < mods.size(); ++i) {
    if (r.projective[i] || !r.gp[i].certified()) continue;
    CoreEntry e{i, mods[i].top, mods[i].length, {i}, 0};
    ModulePtr cur = mods[i].module;
    for (std::size_t step = 0; step < mods.size() + 1; ++step) {
      cur = share(syzygy(cur));
      if (cur->is_zero()) {
        r.problems.push_back("syzygy orbit of a non-projective GP module reached zero");
        break;
      }
      std::size_t t = simple_top(cur);
      if (t == npos) {
        r.problems.push_back("syzygy of an indecomposable is decomposable");
        break;
      }
      std::size_t j = find_indecomposable(n, t, cur->total_dim());
      if (j == npos || iso_probe(cur, mods[j].module).verdict != IsoVerdict::Iso) {
        r.problems.push_back("syzygy not matched in the enumeration");
        break;
      }
      auto hit = std::find(e.orbit.begin(), e.orbit.end(), j);
      if (hit != e.orbit.end()) {
        e.period = static_cast<std::size_t>(e.orbit.end() - hit);
        break;
      }
      e.orbit.push_back(j);
    }
    r.non_projective_gp.push_back(std::move(e));
    if (std::find(r.cover_tops.begin(), r.cover_tops.end(), mods[i].top) == r.cover_tops.end())
      r.cover_tops.push_back(mods[i].top);
  }
  std::sort(r.cover_tops.begin(), r.cover_tops.end());
  return r;
}

struct GorensteinEvidence {
  std::size_t bound = 0;
  std::optional<std::size_t> left;   // pd of D(A_A), the injective dimension of A_A
  std::optional<std::size_t> right;  // pd over A^op of D(_A A)

  std::string label() const {
    if (left && right) return "FINITE(" + std::to_string(std::max(*left, *right)) + ")";
    return "EXCEEDS(" + std::to_string(bound) + ")";
  }
};

// Bounded injective dimension of the regular module on both sides.
inline GorensteinEvidence evidence_non_gorenstein(const AlgebraPtr& a, std::size_t bound) {
  GorensteinEvidence e;
  e.bound = bound;
  e.left = pd_up_to(share(injective_cogenerator(a)), bound);
  e.right = pd_up_to(share(injective_cogenerator(a->opposite())), bound);
  return e;
}

}  // namespace smonkit
