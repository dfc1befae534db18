// Builds m (x) P(3) over k[x]/x^2 (x) kQ3, checks smon, splits at the source and
// certifies a Gorenstein-projective module.
#include <iostream>

#include "smonkit/smonkit.hpp"

using namespace smonkit;

int main() {
  auto a = catalog::algebra(catalog::truncated_loop(2));
  auto ctx = make_context(a, catalog::q3());

  Module m = projective_module(a, 0);
  LayeredRep x = tensor(ctx, m, projective_module(ctx->factor_alg, 2));
  std::cout << io::serialize_layered(x, "kx2.alg");

  auto r = smon_check(x, ClassPredicate::all());
  std::cout << "smon " << r.to_string() << "\n";

  auto t = split_at_source(x, 2);
  bool round_trip = assemble(t).to_flat() == x.to_flat();
  std::cout << "split round trip " << (round_trip ? "yes" : "no") << "\n";

  auto s = share(simple_module(a, 0));
  auto cert = gp_cert(s, 10);
  std::cout << "gp(S) " << cert.label() << "\n";

  return r.pass && round_trip && cert.certified() ? 0 : 1;
}
