// Command-line front end: file checks, layered-membership tests, Ext and
// certificates, tensor and split constructions, and verification suites.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "smonkit/smonkit.hpp"

namespace fs = std::filesystem;
using namespace smonkit;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kUnknown = 3 };

struct Options {
  std::optional<Scalar> prime;
  std::size_t bound = 8;
  bool bound_set = false;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  std::string format = "text";
  bool no_timing = false;
  std::string pred = "ALL";
  std::optional<std::size_t> k;
  std::size_t vertex = 0;
  std::optional<std::size_t> instance;
  std::vector<std::string> files;
  std::string suite;
};

std::string header_of(const fs::path& p) {
  auto lines = io::tokenize(io::read_file(p));
  return lines.empty() ? std::string() : lines.front().tokens.front().text;
}

// The algebra path named on the `keyword` line of a file, relative to the working directory.
std::string reference_of(const fs::path& p, const std::string& keyword) {
  for (const auto& l : io::tokenize(io::read_file(p)))
    if (l.tokens[0].text == keyword && l.tokens.size() == 2) {
      fs::path r(l.tokens[1].text);
      return (r.is_relative() ? p.parent_path() / r : r).lexically_normal().generic_string();
    }
  throw Error(p.string() + " has no '" + keyword + "' line");
}

void require_prime(const Options& o, Scalar p) {
  if (o.prime && *o.prime != p)
    throw PrimeMismatch("file is over F_" + std::to_string(p) + " but --prime " + std::to_string(*o.prime) + " was given");
}

LayeredRep load_layered(const Options& o, const std::string& path) {
  LayeredRep x = io::load_layered(path);
  require_prime(o, x.context()->base->prime());
  return x;
}

// A module file, or the flat module of a layered file.
ModulePtr load_any_module(const Options& o, const std::string& path) {
  ModulePtr m = header_of(path) == "layered" ? share(io::load_layered(path).to_flat()) : share(io::load_module(path));
  require_prime(o, m->algebra().prime());
  return m;
}

AlgebraPtr load_algebra(const Options& o, const std::string& path) {
  AlgebraPtr a = io::load_algebra(path);
  require_prime(o, a->prime());
  return a;
}

ClassPredicate predicate(const Options& o, const AlgebraPtr& base) {
  if (o.pred == "ALL") return ClassPredicate::all();
  if (o.pred == "PROJ") return ClassPredicate::proj();
  if (o.pred == "INJ") return ClassPredicate::inj();
  if (o.pred == "GPROJ") return ClassPredicate::gproj(o.bound);
  if (o.pred == "SEMI_GP") return ClassPredicate::semi_gp(o.bound);
  if (o.pred == "PERP_DA") return ClassPredicate::perp_of_dual_regular(base, o.bound);
  throw CLI::ValidationError("--pred", "unknown class " + o.pred);
}

int verdict_exit(const Certificate& c) { return c.certified() ? kPass : c.refuted() ? kFail : kUnknown; }

int cmd_check(const Options& o, std::ostream& out) {
  int code = kPass;
  for (const auto& f : o.files) {
    const std::string kind = header_of(f);
    std::vector<std::string> bad;
    if (kind == "algebra") {
      auto a = load_algebra(o, f);
      out << f << ": algebra, " << a->num_vertices() << " vertices, " << a->num_arrows() << " arrows, dimension "
          << a->dimension() << "\n";
    } else if (kind == "module") {
      Module m = io::load_module(f, false);
      require_prime(o, m.algebra().prime());
      bad = check_module(m);
      if (bad.empty()) out << f << ": module, dims " << suites::dims_string(m.dims()) << "\n";
      for (const auto& b : bad) out << f << ": violates " << b << "\n";
    } else if (kind == "layered") {
      LayeredRep x = io::load_layered(f, false);
      require_prime(o, x.context()->base->prime());
      bad = validate(x);
      if (bad.empty()) out << f << ": layered, total dimension " << x.total_dim() << "\n";
      for (const auto& b : bad) out << f << ": " << b << "\n";
    } else {
      throw ParseError("unknown file kind '" + kind + "'", 1);
    }
    if (!bad.empty()) code = kFail;
  }
  return code;
}

int cmd_membership(const Options& o, bool monic, std::ostream& out) {
  LayeredRep x = load_layered(o, o.files.at(0));
  auto pred = predicate(o, x.context()->base);
  auto r = monic ? smon_check(x, pred) : sepi_check(x, pred);
  out << r.to_string() << "\n";
  return r.pass ? kPass : kFail;
}

int cmd_coker(const Options& o, std::ostream& out) {
  LayeredRep x = load_layered(o, o.files.at(0));
  if (o.vertex < 1 || o.vertex > x.context()->quiver_vertices()) throw CLI::ValidationError("--vertex", "out of range");
  out << io::serialize_module(coker_i(x, o.vertex - 1), reference_of(o.files[0], "base"));
  return kPass;
}

int cmd_ext(const Options& o, std::ostream& out) {
  auto m = load_any_module(o, o.files.at(0));
  auto n = load_any_module(o, o.files.at(1));
  if (o.k) {
    out << ext_dim(m, n, *o.k) << "\n";
    return kPass;
  }
  auto d = ext_dims(resolve(m, o.bound + 1), n, o.bound);
  for (std::size_t k = 0; k < d.size(); ++k) out << "Ext^" << k << " " << d[k] << "\n";
  return kPass;
}

int cmd_cert(const Options& o, bool full, std::ostream& out) {
  auto m = load_any_module(o, o.files.at(0));
  auto c = full ? gp_cert(m, o.bound) : semi_gp_cert(m, o.bound);
  out << c.label() << "\n";
  return verdict_exit(c);
}

int cmd_tensor(const Options& o, std::ostream& out) {
  Module m = io::load_module(o.files.at(0));
  Module u = io::load_module(o.files.at(1));
  require_prime(o, m.algebra().prime());
  require_prime(o, u.algebra().prime());
  if (m.algebra().prime() != u.algebra().prime()) throw PrimeMismatch("factors over different primes");
  auto ctx = make_context(m.algebra_ptr(), u.algebra().factor(0));
  Module u2(ctx->factor_alg, u.dims(), [&] {
    std::vector<Matrix> ms;
    for (std::size_t g = 0; g < u.algebra().num_arrows(); ++g) ms.push_back(u.map(g));
    return ms;
  }());
  out << io::serialize_layered(tensor(ctx, m, u2), reference_of(o.files[0], "algebra"));
  return kPass;
}

int cmd_split(const Options& o, std::ostream& out) {
  LayeredRep x = load_layered(o, o.files.at(0));
  const std::size_t nq = x.context()->quiver_vertices();
  if (o.vertex < 1 || o.vertex > nq) throw CLI::ValidationError("--vertex", "out of range");
  Triple t = split_at_source(x, o.vertex - 1);
  bool round_trip = assemble(t).to_flat() == x.to_flat();
  auto rep = xz_condition_check(t, o.bound);
  out << "source " << o.vertex << "\n";
  out << "y dims " << suites::dims_string(t.y->dims()) << "\n";
  out << "x dims " << suites::dims_string(t.x.to_flat().dims()) << "\n";
  out << "phi rank " << hom_rank(t.phi) << "\n";
  out << "roundtrip " << (round_trip ? "yes" : "no") << "\n";
  out << "condition-i " << (rep.phi_star_epi ? "yes" : "no") << "\n";
  out << "condition-ii " << (rep.ext_iso ? "yes" : "no at degree " + std::to_string(rep.first_ext_failure)) << "\n";
  out << "condition-iii " << rep.y_cert.label() << "\n";
  out << "assembled " << rep.assembled.label() << "\n";
  out << "agree " << (rep.agree() ? "yes" : "no") << "\n";
  return round_trip && rep.agree() ? kPass : kFail;
}

int cmd_suite(const Options& o, std::ostream& out) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), o.suite) == names.end())
    throw CLI::ValidationError("suite", "unknown suite " + o.suite);
  SuiteConfig cfg;
  cfg.suite = o.suite;
  if (o.bound_set) cfg.bound = o.bound;
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  cfg.prime = o.prime.value_or(2);
  cfg.instance = o.instance;
  if (o.files.size() > 2) throw CLI::ValidationError("suite", "at most two context files");
  if (!o.files.empty()) {
    AlgebraPtr a = load_algebra(o, o.files[0]);
    cfg.algebra = a;
    if (o.files.size() == 2) {
      AlgebraPtr q = load_algebra(o, o.files[1]);
      cfg.contexts.push_back(make_context(a, q->factor(0)));
    } else if (o.suite != "nakayama") {
      for (const auto& q : {catalog::a2(), catalog::q3()}) cfg.contexts.push_back(make_context(a, q));
      if (o.suite == "weakly-gorenstein") cfg.contexts.erase(cfg.contexts.begin() + 1);
    }
  }
  auto rep = run_suite(cfg);
  out << (o.format == "records" ? rep.records_text() : rep.text(!o.no_timing));
  return rep.ok() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"smonkit: separated monic representations over bound quiver algebras"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--prime", o.prime, "require files to be over this prime (suite default contexts use it)");
    c->add_option_function<std::size_t>(
        "--bound",
        [&](const std::size_t& n) {
          o.bound = n;
          o.bound_set = true;
        },
        "certificate and Ext bound N");
  };

  auto* check = app.add_subcommand("check", "validate algebra, module and layered files");
  check->add_option("files", o.files)->required()->check(CLI::ExistingFile);
  common(check);

  std::vector<std::pair<std::string, CLI::App*>> singles;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"smon", "separated monic membership of a layered file"},
           {"sepi", "separated epic membership of a layered file"},
           {"coker", "cokernel of the incoming map at --vertex"},
           {"gp", "bounded Gorenstein-projective certificate"},
           {"semigp", "bounded semi-Gorenstein-projective certificate"},
           {"split", "split a layered file at the source --vertex"}}) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", o.files)->required()->expected(1)->check(CLI::ExistingFile);
    common(c);
    if (name == "smon" || name == "sepi")
      c->add_option("--pred", o.pred, "class for the branch condition")
          ->check(CLI::IsMember({"ALL", "PROJ", "INJ", "GPROJ", "SEMI_GP", "PERP_DA"}));
    if (name == "coker" || name == "split") c->add_option("--vertex", o.vertex, "quiver vertex (1-based)")->required();
  }

  auto* ext = app.add_subcommand("ext", "dimensions of Ext^k(M, N)");
  ext->add_option("files", o.files)->required()->expected(2)->check(CLI::ExistingFile);
  ext->add_option("--k", o.k, "single degree");
  common(ext);

  auto* ten = app.add_subcommand("tensor", "layered file of M (x) U");
  ten->add_option("files", o.files)->required()->expected(2)->check(CLI::ExistingFile);
  common(ten);

  auto* suite = app.add_subcommand("suite", "run a verification suite");
  suite->add_option("name", o.suite)->required();
  suite->add_option("context", o.files, "A, or A and Q, algebra files")->check(CLI::ExistingFile);
  suite->add_option("--samples", o.samples);
  suite->add_option("--seed", o.seed);
  suite->add_option("--instance", o.instance, "run only this instance index");
  suite->add_option("--format", o.format)->check(CLI::IsMember({"text", "records"}));
  suite->add_flag("--no-timing", o.no_timing, "omit the wall-time line");
  common(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  std::ostringstream out;
  int code = kPass;
  try {
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "check") code = cmd_check(o, out);
    else if (cmd == "smon") code = cmd_membership(o, true, out);
    else if (cmd == "sepi") code = cmd_membership(o, false, out);
    else if (cmd == "coker") code = cmd_coker(o, out);
    else if (cmd == "ext") code = cmd_ext(o, out);
    else if (cmd == "gp") code = cmd_cert(o, true, out);
    else if (cmd == "semigp") code = cmd_cert(o, false, out);
    else if (cmd == "tensor") code = cmd_tensor(o, out);
    else if (cmd == "split") code = cmd_split(o, out);
    else if (cmd == "suite") code = cmd_suite(o, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const LimitExceeded& e) {
    std::cout << out.str();
    std::cerr << "unknown: " << e.what() << "\n";
    return kUnknown;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  std::cout << out.str();
  return code;
}
