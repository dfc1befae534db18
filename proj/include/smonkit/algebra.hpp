#pragma once

// Finite-dimensional algebras presented as tensor products of monomial bound
// quiver algebras, B = kQ_1/I_1 (x) ... (x) kQ_r/I_r over F_p.
//
// A single factor is an ordinary monomial algebra. Two factors give
// Lambda = A (x) kQ/I. Vertices of the product are tuples of factor vertices,
// numbered in mixed radix with factor 0 varying fastest. Arrows are copies of
// factor arrows with the other coordinates fixed, subject to the factor
// relations and the commutativity squares between different factors.
//
// The indecomposable projective P(x) has the explicit basis of path tuples
// (p_1, ..., p_r) with p_f nonzero and s(p_f) = x_f, again ordered in mixed
// radix with factor 0 fastest. Every arrow acts on this basis by a partial map
// (extend one coordinate, or vanish), which is all the module engine needs.

#include <cstddef>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "smonkit/exactla.hpp"
#include "smonkit/quiver.hpp"

namespace smonkit {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

struct AlgebraArrow {
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t factor = 0;
  std::size_t arrow = 0;  // index within the factor quiver
  std::string name;
};

// A relation every module must satisfy: either a monomial composite equal to
// zero, or a commutativity square lhs = rhs. Arrow lists are in applied order.
struct AlgebraRelation {
  std::string name;
  std::vector<std::size_t> lhs;
  std::vector<std::size_t> rhs;  // empty for monomial relations
  bool commutativity() const { return !rhs.empty(); }
};

// Basis of one indecomposable projective P(x).
struct ProjectiveBasis {
  std::size_t top = 0;
  std::vector<std::vector<std::size_t>> tuple;  // local path index per factor
  std::vector<std::size_t> target;              // end vertex of each element
  std::vector<std::size_t> parent;              // element minus its last arrow, npos for e_x
  std::vector<std::size_t> via;                 // global arrow from parent
  std::vector<std::size_t> position;            // coordinate within P(x)_{target}
  std::vector<std::vector<std::size_t>> at;     // elements ending at each vertex
  std::size_t size() const { return target.size(); }
};

class Algebra {
 public:
  Algebra(Scalar p, std::vector<BoundQuiver> factors) : p_(p), factors_(std::move(factors)) {
    if (!is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
    if (factors_.empty()) throw Error("algebra needs at least one factor");
    stride_.resize(factors_.size());
    n_ = 1;
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      stride_[f] = n_;
      n_ *= factors_[f].quiver().num_vertices();
    }
    build_arrows();
    build_relations();
    build_projectives();
    build_signature();
  }

  static AlgebraPtr make(Scalar p, BoundQuiver bq) {
    return std::make_shared<const Algebra>(p, std::vector<BoundQuiver>{std::move(bq)});
  }
  static AlgebraPtr tensor(const Algebra& a, const Algebra& b) {
    if (a.prime() != b.prime()) throw PrimeMismatch("tensor of algebras over different primes");
    std::vector<BoundQuiver> fs = a.factors_;
    fs.insert(fs.end(), b.factors_.begin(), b.factors_.end());
    return std::make_shared<const Algebra>(a.prime(), std::move(fs));
  }

  Scalar prime() const { return p_; }
  std::size_t num_factors() const { return factors_.size(); }
  const BoundQuiver& factor(std::size_t f) const { return factors_.at(f); }
  const std::vector<BoundQuiver>& factors() const { return factors_; }

  std::size_t num_vertices() const { return n_; }
  std::size_t coordinate(std::size_t x, std::size_t f) const {
    return (x / stride_[f]) % factors_[f].quiver().num_vertices();
  }
  std::size_t with_coordinate(std::size_t x, std::size_t f, std::size_t v) const {
    return x - coordinate(x, f) * stride_[f] + v * stride_[f];
  }
  std::vector<std::size_t> vertex_tuple(std::size_t x) const {
    std::vector<std::size_t> t(factors_.size());
    for (std::size_t f = 0; f < t.size(); ++f) t[f] = coordinate(x, f);
    return t;
  }
  std::size_t vertex_index(const std::vector<std::size_t>& t) const {
    std::size_t x = 0;
    for (std::size_t f = 0; f < t.size(); ++f) x += t[f] * stride_[f];
    return x;
  }
  std::string vertex_label(std::size_t x) const {
    if (factors_.size() == 1) return std::to_string(x + 1);
    std::string s = "(";
    for (std::size_t f = 0; f < factors_.size(); ++f) s += (f ? "," : "") + std::to_string(coordinate(x, f) + 1);
    return s + ")";
  }

  std::size_t num_arrows() const { return arrows_.size(); }
  const std::vector<AlgebraArrow>& arrows() const { return arrows_; }
  const AlgebraArrow& arrow(std::size_t g) const { return arrows_.at(g); }
  const std::vector<std::size_t>& incoming(std::size_t x) const { return in_.at(x); }
  const std::vector<std::size_t>& outgoing(std::size_t x) const { return out_.at(x); }
  // Copy of factor arrow `a` (of factor f) starting at global vertex x.
  std::size_t arrow_at(std::size_t f, std::size_t a, std::size_t x) const {
    std::size_t g = arrow_lookup_[f][a][x];
    if (g == npos) throw UnknownArrow("arrow does not start at the given vertex");
    return g;
  }

  const std::vector<AlgebraRelation>& relations() const { return relations_; }

  const ProjectiveBasis& projective(std::size_t x) const { return proj_.at(x); }
  std::size_t dimension() const {
    std::size_t d = 0;
    for (const auto& pb : proj_) d += pb.size();
    return d;
  }

  // Element index of g * b in P(x), or npos when the product vanishes.
  std::size_t act_left(std::size_t x, std::size_t b, std::size_t g) const {
    const auto& pb = proj_[x];
    const auto& ar = arrows_[g];
    if (ar.source != pb.target[b]) return npos;
    const auto& bq = factors_[ar.factor];
    std::size_t path = bq.paths_from(coordinate(x, ar.factor))[pb.tuple[b][ar.factor]];
    std::size_t np = bq.extend_left(path, ar.arrow);
    if (np == npos) return npos;
    auto t = pb.tuple[b];
    t[ar.factor] = bq.local_index(np);
    return tuple_index(x, t);
  }

  // For g: v -> w and b in P(w), the element b * g of P(v) (g applied first),
  // or npos when it vanishes.
  std::size_t act_right(std::size_t w, std::size_t b, std::size_t g) const {
    const auto& ar = arrows_[g];
    if (ar.target != w) return npos;
    const auto& bq = factors_[ar.factor];
    const auto& pb = proj_[w];
    std::size_t path = bq.paths_from(coordinate(w, ar.factor))[pb.tuple[b][ar.factor]];
    std::size_t np = bq.extend_right(path, ar.arrow);
    if (np == npos) return npos;
    auto t = pb.tuple[b];
    t[ar.factor] = bq.local_index(np);
    return tuple_index(ar.source, t);
  }

  std::string element_name(std::size_t x, std::size_t b) const {
    const auto& pb = proj_[x];
    std::string s;
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      const auto& bq = factors_[f];
      std::size_t path = bq.paths_from(coordinate(x, f))[pb.tuple[b][f]];
      s += (f ? "(x)" : "") + path_name(bq.quiver(), bq.path(path));
    }
    return s;
  }

  // Element b of P(x) ends at some v; the same path tuple read backwards is an
  // element of P^op(v) ending at x. Returns its index there.
  std::size_t opposite_element(std::size_t x, std::size_t b) const {
    AlgebraPtr op = opposite();
    const auto& pb = proj_[x];
    std::vector<std::size_t> t(factors_.size());
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      const Path& p = factors_[f].path(factors_[f].paths_from(coordinate(x, f))[pb.tuple[b][f]]);
      Path r{p.end, p.start, {p.arrows.rbegin(), p.arrows.rend()}};
      std::size_t idx = op->factors_[f].find(r);
      t[f] = op->factors_[f].local_index(idx);
    }
    return op->tuple_index(pb.target[b], t);
  }

  AlgebraPtr opposite() const {
    std::lock_guard<std::mutex> lock(op_mutex_);
    if (!op_) {
      std::vector<BoundQuiver> fs;
      for (const auto& f : factors_) fs.push_back(f.opposite());
      op_ = std::make_shared<const Algebra>(p_, std::move(fs));
    }
    return op_;
  }

  const std::string& signature() const { return signature_; }
  bool operator==(const Algebra& o) const { return signature_ == o.signature_; }

 private:
  std::size_t tuple_index(std::size_t x, const std::vector<std::size_t>& t) const {
    std::size_t idx = 0, mult = 1;
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      idx += t[f] * mult;
      mult *= factors_[f].paths_from(coordinate(x, f)).size();
    }
    return idx;
  }

  void build_arrows() {
    in_.assign(n_, {});
    out_.assign(n_, {});
    arrow_lookup_.resize(factors_.size());
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      const Quiver& q = factors_[f].quiver();
      arrow_lookup_[f].assign(q.num_arrows(), std::vector<std::size_t>(n_, npos));
      for (std::size_t a = 0; a < q.num_arrows(); ++a)
        for (std::size_t x = 0; x < n_; ++x) {
          if (coordinate(x, f) != q.arrow(a).source) continue;
          AlgebraArrow ar;
          ar.source = x;
          ar.target = with_coordinate(x, f, q.arrow(a).target);
          ar.factor = f;
          ar.arrow = a;
          if (factors_.size() == 1) {
            ar.name = q.arrow(a).name;
          } else {
            ar.name = "(";
            for (std::size_t h = 0; h < factors_.size(); ++h)
              ar.name += (h ? "," : "") + (h == f ? q.arrow(a).name : std::to_string(coordinate(x, h) + 1));
            ar.name += ")";
          }
          arrow_lookup_[f][a][x] = arrows_.size();
          out_[ar.source].push_back(arrows_.size());
          in_[ar.target].push_back(arrows_.size());
          arrows_.push_back(std::move(ar));
        }
    }
  }

  void build_relations() {
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      const BoundQuiver& bq = factors_[f];
      for (const Path& g : bq.ideal().generators())
        for (std::size_t x = 0; x < n_; ++x) {
          if (coordinate(x, f) != g.start) continue;
          AlgebraRelation r;
          std::size_t cur = x;
          for (std::size_t a : g.arrows) {
            std::size_t ga = arrow_at(f, a, cur);
            r.lhs.push_back(ga);
            cur = arrows_[ga].target;
          }
          r.name = path_name(bq.quiver(), g);
          if (factors_.size() > 1) r.name += "@" + vertex_label(x);
          relations_.push_back(std::move(r));
        }
    }
    for (std::size_t f = 0; f < factors_.size(); ++f)
      for (std::size_t h = f + 1; h < factors_.size(); ++h)
        for (std::size_t a = 0; a < factors_[f].quiver().num_arrows(); ++a)
          for (std::size_t b = 0; b < factors_[h].quiver().num_arrows(); ++b)
            for (std::size_t x = 0; x < n_; ++x) {
              if (coordinate(x, f) != factors_[f].quiver().arrow(a).source) continue;
              if (coordinate(x, h) != factors_[h].quiver().arrow(b).source) continue;
              std::size_t ax = arrow_at(f, a, x), bx = arrow_at(h, b, x);
              AlgebraRelation r;
              r.lhs = {ax, arrow_at(h, b, arrows_[ax].target)};
              r.rhs = {bx, arrow_at(f, a, arrows_[bx].target)};
              r.name = "commute(" + arrows_[ax].name + "," + arrows_[bx].name + ")";
              relations_.push_back(std::move(r));
            }
  }

  void build_projectives() {
    proj_.resize(n_);
    for (std::size_t x = 0; x < n_; ++x) {
      ProjectiveBasis& pb = proj_[x];
      pb.top = x;
      pb.at.assign(n_, {});
      std::size_t total = 1;
      std::vector<std::size_t> counts(factors_.size());
      for (std::size_t f = 0; f < factors_.size(); ++f) {
        counts[f] = factors_[f].paths_from(coordinate(x, f)).size();
        total *= counts[f];
      }
      for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<std::size_t> t(factors_.size());
        std::size_t rem = idx;
        for (std::size_t f = 0; f < factors_.size(); ++f) {
          t[f] = rem % counts[f];
          rem /= counts[f];
        }
        std::vector<std::size_t> ends(factors_.size());
        std::size_t last = npos;
        for (std::size_t f = 0; f < factors_.size(); ++f) {
          const auto& bq = factors_[f];
          const Path& path = bq.path(bq.paths_from(coordinate(x, f))[t[f]]);
          ends[f] = path.end;
          if (!path.trivial()) last = f;
        }
        std::size_t y = vertex_index(ends);
        pb.tuple.push_back(t);
        pb.target.push_back(y);
        pb.position.push_back(pb.at[y].size());
        pb.at[y].push_back(idx);
        if (last == npos) {
          pb.parent.push_back(npos);
          pb.via.push_back(npos);
        } else {
          const auto& bq = factors_[last];
          std::size_t path = bq.paths_from(coordinate(x, last))[t[last]];
          std::size_t par = bq.parent(path);
          auto pt = t;
          pt[last] = bq.local_index(par);
          auto pends = ends;
          pends[last] = bq.path(par).end;
          std::size_t py = vertex_index(pends);
          pb.parent.push_back(tuple_index(x, pt));
          pb.via.push_back(arrow_at(last, bq.path(path).arrows.back(), py));
        }
      }
    }
  }

  void build_signature() {
    std::ostringstream os;
    os << "p=" << p_;
    for (const auto& f : factors_) {
      const Quiver& q = f.quiver();
      os << "|n=" << q.num_vertices();
      for (const auto& a : q.arrows()) os << ";" << a.name << ":" << a.source << ">" << a.target;
      for (const auto& g : f.ideal().generators()) {
        os << ";r" << g.start;
        for (auto a : g.arrows) os << "," << a;
      }
    }
    signature_ = os.str();
  }

  Scalar p_;
  std::vector<BoundQuiver> factors_;
  std::vector<std::size_t> stride_;
  std::size_t n_ = 0;
  std::vector<AlgebraArrow> arrows_;
  std::vector<std::vector<std::size_t>> in_, out_;
  std::vector<std::vector<std::vector<std::size_t>>> arrow_lookup_;
  std::vector<AlgebraRelation> relations_;
  std::vector<ProjectiveBasis> proj_;
  std::string signature_;
  mutable std::mutex op_mutex_;
  mutable AlgebraPtr op_;
};

inline void require_same_algebra(const Algebra& a, const Algebra& b) {
  if (!(a == b)) throw AlgebraMismatch("objects live over different algebras");
}

}  // namespace smonkit
