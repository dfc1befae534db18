#pragma once

// Small named bound quivers and algebras used throughout the tests and suites.

#include <cstddef>
#include <string>
#include <vector>

#include "smonkit/algebra.hpp"
#include "smonkit/quiver.hpp"

namespace smonkit::catalog {

// Relations are given in applied order (first arrow first).
inline BoundQuiver bound_quiver(std::size_t n, std::vector<Arrow> arrows,
                                const std::vector<std::vector<std::string>>& applied_relations) {
  Quiver q(n, std::move(arrows));
  std::vector<Path> gens;
  for (const auto& rel : applied_relations) {
    std::vector<std::string> word(rel.rbegin(), rel.rend());
    gens.push_back(path_from_word(q, word));
  }
  return BoundQuiver(std::move(q), MonomialIdeal(std::move(gens)));
}

// 1 <-beta- 2 <-alpha- 3 with beta*alpha = 0.
inline BoundQuiver q3() { return bound_quiver(3, {{"alpha", 2, 1}, {"beta", 1, 0}}, {{"alpha", "beta"}}); }

// 1 <-beta- 2 <-alpha- 3 without relations.
inline BoundQuiver a3() { return bound_quiver(3, {{"alpha", 2, 1}, {"beta", 1, 0}}, {}); }

// 2 -> 1.
inline BoundQuiver a2() { return bound_quiver(2, {{"a", 1, 0}}, {}); }

// One vertex.
inline BoundQuiver point() { return bound_quiver(1, {}, {}); }

// r parallel arrows 2 -> 1.
inline BoundQuiver kronecker(std::size_t r) {
  std::vector<Arrow> arrows;
  for (std::size_t i = 1; i <= r; ++i) arrows.push_back({"a" + std::to_string(i), 1, 0});
  return bound_quiver(2, std::move(arrows), {});
}

// k[x]/(x^n), n >= 2.
inline BoundQuiver truncated_loop(std::size_t n) {
  std::vector<std::string> rel(n, "x");
  return bound_quiver(1, {{"x", 0, 0}}, {rel});
}

// Linear quiver n -> n-1 -> ... -> 1 with arrows a_i: i+1 -> i, all paths of length >= len zero
// (len = 0 means no relations).
inline BoundQuiver linear(std::size_t n, std::size_t len = 0) {
  std::vector<Arrow> arrows;
  for (std::size_t i = 1; i < n; ++i) arrows.push_back({"a" + std::to_string(i), i, i - 1});
  std::vector<std::vector<std::string>> rels;
  if (len >= 2)
    for (std::size_t s = n; s >= len + 1; --s) {
      std::vector<std::string> rel;
      for (std::size_t k = 0; k < len; ++k) rel.push_back("a" + std::to_string(s - 1 - k));
      rels.push_back(rel);
    }
  return bound_quiver(n, std::move(arrows), rels);
}

// The cyclic Nakayama algebra 1 -alpha-> 2 -beta-> 3 -gamma-> 1 with relations
// beta alpha (gamma beta alpha)^5 and (alpha gamma beta)^6; Kupisch series (17, 18, 18).
inline BoundQuiver nakayama_17_18_18() {
  std::vector<std::string> r1, r2;
  for (int i = 0; i < 5; ++i) r1.insert(r1.end(), {"alpha", "beta", "gamma"});
  r1.insert(r1.end(), {"alpha", "beta"});
  for (int i = 0; i < 6; ++i) r2.insert(r2.end(), {"beta", "gamma", "alpha"});
  return bound_quiver(3, {{"alpha", 0, 1}, {"beta", 1, 2}, {"gamma", 2, 0}}, {r1, r2});
}

inline AlgebraPtr algebra(const BoundQuiver& bq, Scalar p = 2) { return Algebra::make(p, bq); }

}  // namespace smonkit::catalog
