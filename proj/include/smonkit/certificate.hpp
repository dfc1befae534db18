#pragma once

// Bounded-evidence verdicts for semi-Gorenstein-projective and
// Gorenstein-projective membership.

#include <cstddef>
#include <string>

#include "smonkit/duality.hpp"
#include "smonkit/homological.hpp"

namespace smonkit {

enum class Verdict { Certified, Refuted, Unknown };

struct Certificate {
  Verdict verdict = Verdict::Unknown;
  std::size_t bound = 0;
  std::string evidence;

  bool certified() const { return verdict == Verdict::Certified; }
  bool refuted() const { return verdict == Verdict::Refuted; }

  std::string label() const {
    switch (verdict) {
      case Verdict::Certified:
        return "CERTIFIED_UP_TO(" + std::to_string(bound) + ")";
      case Verdict::Refuted:
        return "REFUTED(" + evidence + ")";
      default:
        return "UNKNOWN(" + evidence + ")";
    }
  }
};

struct CertOptions {
  std::size_t dim_cap = 0;  // resolution term cap; exceeding it yields UNKNOWN
};

// Ext^i(M, B) = 0 for 1 <= i <= N.
inline Certificate semi_gp_cert(const ModulePtr& m, std::size_t n, const CertOptions& opt = {}) {
  Certificate c;
  c.bound = n;
  if (m->is_zero()) {
    c.verdict = Verdict::Certified;
    return c;
  }
  try {
    auto res = resolve(m, n + 1, {{}, opt.dim_cap});
    auto reg = regular_module(m->algebra_ptr()).module;
    auto ext = ext_dims(res, reg, n);
    for (std::size_t i = 1; i <= n; ++i)
      if (ext[i] != 0) {
        c.verdict = Verdict::Refuted;
        c.evidence = "Ext^" + std::to_string(i) + " dim " + std::to_string(ext[i]);
        return c;
      }
    c.verdict = Verdict::Certified;
  } catch (const LimitExceeded& e) {
    c.verdict = Verdict::Unknown;
    c.evidence = e.what();
  }
  return c;
}

// Bounded totally-reflexive test: M and M* semi-GP up to N, and M reflexive.
inline Certificate gp_cert(const ModulePtr& m, std::size_t n, const CertOptions& opt = {}) {
  Certificate c = semi_gp_cert(m, n, opt);
  if (!c.certified() || m->is_zero()) return c;
  auto ms = share(star(m).module);
  Certificate d = semi_gp_cert(ms, n, opt);
  if (d.refuted()) {
    c.verdict = Verdict::Refuted;
    c.evidence = "dual side " + d.evidence;
    return c;
  }
  if (!is_reflexive(m)) {
    c.verdict = Verdict::Refuted;
    c.evidence = "not reflexive";
    return c;
  }
  if (!d.certified()) {
    c.verdict = Verdict::Unknown;
    c.evidence = d.evidence;
  }
  return c;
}

}  // namespace smonkit
