#pragma once

// Quivers, paths and admissible monomial ideals.
//
// Vertices are 0-based internally (files and printed output use 1-based
// labels). A path stores its arrows in the order they are applied: the path
// written beta*alpha (alpha first) is stored as {alpha, beta}.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "smonkit/error.hpp"

namespace smonkit {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
  bool operator==(const Arrow&) const = default;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::size_t vertices, std::vector<Arrow> arrows) : n_(vertices), arrows_(std::move(arrows)) {
    std::set<std::string> names;
    for (const auto& a : arrows_) {
      if (a.source >= n_ || a.target >= n_) throw Error("arrow " + a.name + " has an endpoint outside the quiver");
      if (a.name.empty()) throw Error("arrow with empty name");
      if (!names.insert(a.name).second) throw Error("duplicate arrow id " + a.name);
    }
    in_.assign(n_, {});
    out_.assign(n_, {});
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
      out_[arrows_[i].source].push_back(i);
      in_[arrows_[i].target].push_back(i);
    }
  }

  std::size_t num_vertices() const { return n_; }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t i) const { return arrows_.at(i); }
  const std::vector<std::size_t>& incoming(std::size_t v) const { return in_.at(v); }
  const std::vector<std::size_t>& outgoing(std::size_t v) const { return out_.at(v); }

  std::optional<std::size_t> find_arrow(const std::string& name) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
      if (arrows_[i].name == name) return i;
    return std::nullopt;
  }
  std::size_t arrow_index(const std::string& name) const {
    if (auto i = find_arrow(name)) return *i;
    throw UnknownArrow("unknown arrow " + name);
  }

  bool is_acyclic() const { return topological_order_impl().has_value(); }

  // Sink-first order: for every arrow j -> i, i precedes j.
  std::vector<std::size_t> topological_order() const {
    auto order = topological_order_impl();
    if (!order) throw Cyclic("quiver has a directed cycle");
    return *order;
  }

  // Vertices with no arrow ending at them.
  std::vector<std::size_t> source_vertices() const {
    if (!is_acyclic()) throw Cyclic("quiver has a directed cycle");
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n_; ++v)
      if (in_[v].empty()) out.push_back(v);
    return out;
  }

  // True when every arrow j -> i has j > i.
  bool has_descending_labels() const {
    return std::all_of(arrows_.begin(), arrows_.end(), [](const Arrow& a) { return a.source > a.target; });
  }

  Quiver opposite() const {
    std::vector<Arrow> rev;
    for (const auto& a : arrows_) rev.push_back({a.name, a.target, a.source});
    return Quiver(n_, std::move(rev));
  }

  bool operator==(const Quiver& o) const { return n_ == o.n_ && arrows_ == o.arrows_; }

 private:
  std::optional<std::vector<std::size_t>> topological_order_impl() const {
    std::vector<std::size_t> pending(n_, 0);
    for (const auto& a : arrows_) ++pending[a.source];
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t v = 0; v < n_; ++v)
      if (!pending[v]) ready.push(v);
    std::vector<std::size_t> order;
    while (!ready.empty()) {
      std::size_t v = ready.top();
      ready.pop();
      order.push_back(v);
      for (std::size_t a : in_[v])
        if (--pending[arrows_[a].source] == 0) ready.push(arrows_[a].source);
    }
    if (order.size() != n_) return std::nullopt;
    return order;
  }

  std::size_t n_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<std::size_t>> in_, out_;
};

struct Path {
  std::size_t start = 0;
  std::size_t end = 0;
  std::vector<std::size_t> arrows;  // applied order

  std::size_t length() const { return arrows.size(); }
  bool trivial() const { return arrows.empty(); }
  bool operator==(const Path&) const = default;

  static Path trivial_at(std::size_t v) { return {v, v, {}}; }
};

// Length first, then lexicographic on arrow indices; trivial paths by vertex.
inline bool path_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.trivial()) return a.start < b.start;
  return a.arrows < b.arrows;
}

// Builds a path from arrow names written in composition order, rightmost
// applied first ("beta alpha" means alpha then beta).
inline Path path_from_word(const Quiver& q, const std::vector<std::string>& word) {
  if (word.empty()) throw Error("empty word does not name a path");
  Path p;
  for (auto it = word.rbegin(); it != word.rend(); ++it) p.arrows.push_back(q.arrow_index(*it));
  p.start = q.arrow(p.arrows.front()).source;
  p.end = q.arrow(p.arrows.back()).target;
  for (std::size_t t = 1; t < p.arrows.size(); ++t)
    if (q.arrow(p.arrows[t]).source != q.arrow(p.arrows[t - 1]).target)
      throw Error("arrows do not compose in relation " + word.front());
  return p;
}

// Arrow names in composition order (leftmost applied last).
inline std::vector<std::string> path_word(const Quiver& q, const Path& p) {
  std::vector<std::string> w;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) w.push_back(q.arrow(*it).name);
  return w;
}

inline std::string path_name(const Quiver& q, const Path& p) {
  if (p.trivial()) return "e" + std::to_string(p.start + 1);
  std::string s;
  for (const auto& a : path_word(q, p)) s += (s.empty() ? "" : "*") + a;
  return s;
}

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::vector<Path> generators) : gens_(std::move(generators)) {}

  const std::vector<Path>& generators() const { return gens_; }

  // p lies in the ideal iff some generator occurs in it as a contiguous subpath.
  bool contains(const Path& p) const {
    for (const auto& g : gens_) {
      if (g.length() > p.length()) continue;
      auto it = std::search(p.arrows.begin(), p.arrows.end(), g.arrows.begin(), g.arrows.end());
      if (it != p.arrows.end()) return true;
    }
    return false;
  }

  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::vector<Path> gens_;
};

inline constexpr std::size_t kDefaultAdmissibilityCap = 64;

// Enumerates every path outside the ideal, ordered by path_less.
inline std::vector<Path> nonzero_paths(const Quiver& q, const MonomialIdeal& ideal,
                                       std::size_t cap = kDefaultAdmissibilityCap) {
  for (const auto& g : ideal.generators())
    if (g.length() < 2) throw NotAdmissible("ideal generator of length < 2");
  const bool acyclic = q.is_acyclic();
  std::vector<Path> all, frontier;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) frontier.push_back(Path::trivial_at(v));
  while (!frontier.empty()) {
    all.insert(all.end(), frontier.begin(), frontier.end());
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (std::size_t a : q.outgoing(p.end)) {
        Path np = p;
        np.arrows.push_back(a);
        np.end = q.arrow(a).target;
        if (ideal.contains(np)) continue;
        if (!acyclic && np.length() >= cap)
          throw NotAdmissible("nonzero path of length " + std::to_string(cap) + " found; ideal is not admissible");
        next.push_back(std::move(np));
      }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), path_less);
  return all;
}

// A quiver with an admissible monomial ideal, plus its cached path basis.
class BoundQuiver {
 public:
  BoundQuiver() = default;
  BoundQuiver(Quiver q, MonomialIdeal ideal, std::size_t cap = kDefaultAdmissibilityCap)
      : q_(std::move(q)), ideal_(std::move(ideal)) {
    for (const auto& g : ideal_.generators()) {
      if (g.arrows.empty()) throw NotAdmissible("trivial path in ideal");
      for (std::size_t a : g.arrows)
        if (a >= q_.num_arrows()) throw UnknownArrow("relation uses an unknown arrow");
    }
    paths_ = nonzero_paths(q_, ideal_, cap);
    for (std::size_t i = 0; i < paths_.size(); ++i) index_[{paths_[i].start, paths_[i].arrows}] = i;
    by_start_.assign(q_.num_vertices(), {});
    for (std::size_t i = 0; i < paths_.size(); ++i) by_start_[paths_[i].start].push_back(i);
    local_.assign(paths_.size(), 0);
    for (const auto& group : by_start_)
      for (std::size_t k = 0; k < group.size(); ++k) local_[group[k]] = k;
    const std::size_t na = q_.num_arrows();
    left_.assign(paths_.size() * na, npos);
    right_.assign(paths_.size() * na, npos);
    parent_.assign(paths_.size(), npos);
    for (std::size_t i = 0; i < paths_.size(); ++i) {
      const Path& p = paths_[i];
      if (!p.trivial()) {
        Path par{p.start, q_.arrow(p.arrows.back()).source, {p.arrows.begin(), p.arrows.end() - 1}};
        parent_[i] = find(par);
      }
      for (std::size_t a = 0; a < na; ++a) {
        if (q_.arrow(a).source == p.end) {
          Path np = p;
          np.arrows.push_back(a);
          np.end = q_.arrow(a).target;
          left_[i * na + a] = find(np);
        }
        if (q_.arrow(a).target == p.start) {
          Path np = p;
          np.arrows.insert(np.arrows.begin(), a);
          np.start = q_.arrow(a).source;
          right_[i * na + a] = find(np);
        }
      }
    }
  }

  const Quiver& quiver() const { return q_; }
  const MonomialIdeal& ideal() const { return ideal_; }
  const std::vector<Path>& paths() const { return paths_; }
  const Path& path(std::size_t i) const { return paths_.at(i); }
  std::size_t dimension() const { return paths_.size(); }

  // Index of a nonzero path, or npos if the path lies in the ideal.
  std::size_t find(const Path& p) const {
    auto it = index_.find({p.start, p.arrows});
    return it == index_.end() ? npos : it->second;
  }
  // Indices of nonzero paths starting at v, in basis order.
  const std::vector<std::size_t>& paths_from(std::size_t v) const { return by_start_.at(v); }
  // Position of a path within paths_from(path.start).
  std::size_t local_index(std::size_t path) const { return local_[path]; }
  // Path minus its last applied arrow (npos for trivial paths).
  std::size_t parent(std::size_t path) const { return parent_[path]; }
  // Index of arrow * path (arrow applied after), npos when zero or not composable.
  std::size_t extend_left(std::size_t path, std::size_t arrow) const {
    return left_[path * q_.num_arrows() + arrow];
  }
  // Index of path * arrow (arrow applied first), npos when zero or not composable.
  std::size_t extend_right(std::size_t path, std::size_t arrow) const {
    return right_[path * q_.num_arrows() + arrow];
  }

  BoundQuiver opposite() const {
    std::vector<Path> gens;
    for (const auto& g : ideal_.generators()) {
      Path r{g.end, g.start, {g.arrows.rbegin(), g.arrows.rend()}};
      gens.push_back(std::move(r));
    }
    return BoundQuiver(q_.opposite(), MonomialIdeal(std::move(gens)));
  }

  bool operator==(const BoundQuiver& o) const { return q_ == o.q_ && ideal_ == o.ideal_; }

 private:
  Quiver q_;
  MonomialIdeal ideal_;
  std::vector<Path> paths_;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index_;
  std::vector<std::vector<std::size_t>> by_start_;
  std::vector<std::size_t> local_, parent_, left_, right_;
};

// { q nonzero, length >= 1, e(q) = s(alpha), alpha*q in I }.
inline std::vector<Path> k_alpha(const BoundQuiver& bq, std::size_t alpha) {
  if (alpha >= bq.quiver().num_arrows()) throw UnknownArrow("arrow index out of range");
  std::vector<Path> out;
  for (std::size_t i = 0; i < bq.dimension(); ++i) {
    const Path& q = bq.path(i);
    if (!q.trivial() && q.end == bq.quiver().arrow(alpha).source && bq.extend_left(i, alpha) == npos)
      out.push_back(q);
  }
  return out;
}

// { q nonzero, length >= 1, s(q) = e(alpha), q*alpha in I }.
inline std::vector<Path> l_alpha(const BoundQuiver& bq, std::size_t alpha) {
  if (alpha >= bq.quiver().num_arrows()) throw UnknownArrow("arrow index out of range");
  std::vector<Path> out;
  for (std::size_t i = 0; i < bq.dimension(); ++i) {
    const Path& q = bq.path(i);
    if (!q.trivial() && q.start == bq.quiver().arrow(alpha).target && bq.extend_right(i, alpha) == npos)
      out.push_back(q);
  }
  return out;
}

inline std::pair<Quiver, MonomialIdeal> opposite(const Quiver& q, const MonomialIdeal& ideal) {
  std::vector<Path> gens;
  for (const auto& g : ideal.generators()) gens.push_back({g.end, g.start, {g.arrows.rbegin(), g.arrows.rend()}});
  return {q.opposite(), MonomialIdeal(std::move(gens))};
}

}  // namespace smonkit
