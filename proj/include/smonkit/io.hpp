#pragma once

// Text formats for bound quiver algebras, modules and layered representations.
//
//   algebra v1            module v1               layered v1
//   prime 2               algebra q3.alg          base kx2.alg
//   vertices 3            dims 1 1 0              quiver-vertices 2
//   arrow alpha 3 2       matrix alpha 1 1        quiver-arrow a 2 1
//   arrow beta 2 1        1                       branch 1
//   relation beta alpha                           dims 1
//                                                 matrix x 1 1
//                                                 0
//                                                 map a
//                                                 component 1 1 1
//                                                 1
//
// Vertices are 1-based. A relation lists arrows in composition order, the
// rightmost one applied first. `#` starts a comment. Matrices omitted from a
// module or branch are zero. Entries are reduced modulo p on load.

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "smonkit/layered.hpp"

namespace smonkit::io {

struct Token {
  std::string text;
  std::size_t column = 1;
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

inline std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    Line line{no, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i >= raw.size()) break;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const { return lines_.at(pos_); }
  const Line& next() { return lines_.at(pos_++); }
  std::size_t last_line() const { return lines_.empty() ? 1 : lines_.back().number; }

  [[noreturn]] void fail_end(const std::string& what) const { throw ParseError(what, last_line() + 1); }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

[[noreturn]] inline void fail(const std::string& what, const Line& l, std::size_t token) {
  throw ParseError(what, l.number, token < l.tokens.size() ? l.tokens[token].column : 1);
}

inline void expect_count(const Line& l, std::size_t n) {
  if (l.tokens.size() < n) fail("'" + l.tokens[0].text + "' expects " + std::to_string(n - 1) + " arguments", l, l.tokens.size() - 1);
  if (l.tokens.size() > n) fail("unexpected token '" + l.tokens[n].text + "'", l, n);
}

inline std::uint64_t number(const Line& l, std::size_t t) {
  const std::string& s = l.tokens.at(t).text;
  if (s.empty() || s.size() > 18 || s.find_first_not_of("0123456789") != std::string::npos)
    fail("expected a non-negative integer, got '" + s + "'", l, t);
  return std::stoull(s);
}

inline std::size_t vertex(const Line& l, std::size_t t, std::size_t n) {
  auto v = number(l, t);
  if (v < 1 || v > n) fail("vertex " + l.tokens[t].text + " out of range 1.." + std::to_string(n), l, t);
  return static_cast<std::size_t>(v - 1);
}

inline void header(Cursor& c, const std::string& kind) {
  if (c.done()) c.fail_end("empty input, expected '" + kind + " v1'");
  const Line& l = c.next();
  if (l.tokens[0].text != kind) fail("expected '" + kind + " v1'", l, 0);
  if (l.tokens.size() < 2 || l.tokens[1].text != "v1") fail("unsupported " + kind + " format version", l, 1);
  if (l.tokens.size() > 2) fail("unexpected token '" + l.tokens[2].text + "'", l, 2);
}

// Quiver section shared by algebra files and the quiver part of layered files.
struct QuiverSpec {
  std::size_t vertices = 0;
  bool have_vertices = false;
  std::vector<Arrow> arrows;
  std::vector<std::pair<Line, std::size_t>> relations;  // line and first token index

  BoundQuiver build() const {
    Quiver q(vertices, arrows);
    std::vector<Path> gens;
    for (const auto& [l, first] : relations) {
      std::vector<std::string> word;
      for (std::size_t t = first; t < l.tokens.size(); ++t) {
        if (!q.find_arrow(l.tokens[t].text)) fail("unknown arrow '" + l.tokens[t].text + "'", l, t);
        word.push_back(l.tokens[t].text);
      }
      try {
        gens.push_back(path_from_word(q, word));
      } catch (const Error& e) {
        fail(e.what(), l, first);
      }
    }
    try {
      return BoundQuiver(std::move(q), MonomialIdeal(std::move(gens)));
    } catch (const NotAdmissible& e) {
      const Line& l = relations.empty() ? Line{0, {}} : relations.back().first;
      throw ParseError(e.what(), l.number ? l.number : 1);
    }
  }
};

// Consumes one quiver line if it matches; keywords are prefixed for layered files.
inline bool quiver_line(QuiverSpec& s, const Line& l, const std::string& prefix) {
  const std::string& k = l.tokens[0].text;
  if (k == prefix + "vertices") {
    expect_count(l, 2);
    if (s.have_vertices) fail("vertices given twice", l, 0);
    s.vertices = static_cast<std::size_t>(number(l, 1));
    if (s.vertices == 0) fail("at least one vertex required", l, 1);
    s.have_vertices = true;
    return true;
  }
  if (k == prefix + "arrow") {
    expect_count(l, 4);
    if (!s.have_vertices) fail("arrow before vertex count", l, 0);
    for (const auto& a : s.arrows)
      if (a.name == l.tokens[1].text) fail("duplicate arrow '" + a.name + "'", l, 1);
    s.arrows.push_back({l.tokens[1].text, vertex(l, 2, s.vertices), vertex(l, 3, s.vertices)});
    return true;
  }
  if (k == prefix + "relation") {
    if (l.tokens.size() < 2) fail("empty relation", l, 0);
    s.relations.emplace_back(l, 1);
    return true;
  }
  return false;
}

inline AlgebraPtr parse_algebra(const std::string& text) {
  Cursor c(tokenize(text));
  header(c, "algebra");
  Scalar p = 0;
  QuiverSpec s;
  while (!c.done()) {
    const Line& l = c.next();
    if (l.tokens[0].text == "prime") {
      expect_count(l, 2);
      auto v = number(l, 1);
      if (v > 0xffffffffull || !is_prime(static_cast<Scalar>(v))) fail("modulus is not a prime", l, 1);
      p = static_cast<Scalar>(v);
      continue;
    }
    if (!quiver_line(s, l, "")) fail("unknown keyword '" + l.tokens[0].text + "'", l, 0);
  }
  if (!p) c.fail_end("missing 'prime'");
  if (!s.have_vertices) c.fail_end("missing 'vertices'");
  return Algebra::make(p, s.build());
}

inline void write_quiver(std::ostream& os, const BoundQuiver& bq, const std::string& prefix) {
  const Quiver& q = bq.quiver();
  os << prefix << "vertices " << q.num_vertices() << "\n";
  for (const auto& a : q.arrows()) os << prefix << "arrow " << a.name << " " << a.source + 1 << " " << a.target + 1 << "\n";
  for (const auto& g : bq.ideal().generators()) {
    os << prefix << "relation";
    for (const auto& w : path_word(q, g)) os << " " << w;
    os << "\n";
  }
}

inline std::string serialize_algebra(const Algebra& a) {
  if (a.num_factors() != 1) throw Error("only single bound quiver algebras have a file form");
  std::ostringstream os;
  os << "algebra v1\nprime " << a.prime() << "\n";
  write_quiver(os, a.factor(0), "");
  return os.str();
}

// Reads `rows` lines of `cols` entries each after a header line.
inline Matrix read_matrix(Cursor& c, Scalar p, std::size_t rows, std::size_t cols) {
  Matrix m(p, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (c.done()) c.fail_end("matrix ends early, expected " + std::to_string(rows) + " rows");
    const Line& l = c.next();
    if (l.tokens.size() != cols)
      fail("row has " + std::to_string(l.tokens.size()) + " entries, expected " + std::to_string(cols), l,
           std::min(l.tokens.size(), cols));
    for (std::size_t j = 0; j < cols; ++j) {
      m(r, j) = static_cast<Scalar>(number(l, j) % p);
    }
  }
  return m;
}

inline void write_matrix(std::ostream& os, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(r, j);
    os << "\n";
  }
}

inline std::size_t single_factor_arrow(const Algebra& a, const Line& l, std::size_t t) {
  auto idx = a.factor(0).quiver().find_arrow(l.tokens[t].text);
  if (!idx) fail("unknown arrow '" + l.tokens[t].text + "'", l, t);
  return *idx;
}

// Body of a module over a single bound quiver algebra: a `dims` line and matrices.
// Stops at the first line whose keyword is not `dims` or `matrix`.
inline Module read_module_body(Cursor& c, const AlgebraPtr& a, std::size_t start_line, bool check) {
  if (a->num_factors() != 1) throw Error("module files are read over single bound quiver algebras");
  const Scalar p = a->prime();
  std::vector<std::size_t> dims;
  bool have_dims = false;
  std::vector<std::optional<Matrix>> maps(a->num_arrows());
  while (!c.done()) {
    const Line& l = c.peek();
    const std::string& k = l.tokens[0].text;
    if (k == "dims") {
      c.next();
      if (have_dims) fail("dims given twice", l, 0);
      expect_count(l, a->num_vertices() + 1);
      for (std::size_t v = 0; v < a->num_vertices(); ++v) dims.push_back(static_cast<std::size_t>(number(l, v + 1)));
      have_dims = true;
    } else if (k == "matrix") {
      c.next();
      if (!have_dims) fail("matrix before dims", l, 0);
      expect_count(l, 4);
      std::size_t g = single_factor_arrow(*a, l, 1);
      const auto& ar = a->arrow(g);
      auto r = number(l, 2), cc = number(l, 3);
      if (r != dims[ar.target] || cc != dims[ar.source])
        fail("matrix " + ar.name + " must be " + std::to_string(dims[ar.target]) + "x" + std::to_string(dims[ar.source]),
             l, 2);
      if (maps[g]) fail("matrix " + ar.name + " given twice", l, 1);
      maps[g] = read_matrix(c, p, static_cast<std::size_t>(r), static_cast<std::size_t>(cc));
    } else {
      break;
    }
  }
  if (!have_dims) throw ParseError("missing 'dims'", start_line);
  std::vector<Matrix> ms;
  for (std::size_t g = 0; g < a->num_arrows(); ++g) {
    const auto& ar = a->arrow(g);
    ms.push_back(maps[g] ? *maps[g] : Matrix(p, dims[ar.target], dims[ar.source]));
  }
  Module m(a, dims, std::move(ms));
  if (!check) return m;
  auto bad = check_module(m);
  if (!bad.empty()) throw ParseError("relation " + bad.front() + " is violated", start_line);
  return m;
}

inline void write_module_body(std::ostream& os, const Module& m) {
  os << "dims";
  for (auto d : m.dims()) os << " " << d;
  os << "\n";
  const Algebra& a = m.algebra();
  for (std::size_t g = 0; g < a.num_arrows(); ++g) {
    const Matrix& x = m.map(g);
    if (x.is_zero()) continue;
    os << "matrix " << a.arrow(g).name << " " << x.rows() << " " << x.cols() << "\n";
    write_matrix(os, x);
  }
}

// Resolves the path named in an `algebra` / `base` line.
using AlgebraResolver = std::function<AlgebraPtr(const std::string&)>;

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline AlgebraResolver file_resolver(const std::filesystem::path& dir) {
  return [dir](const std::string& name) {
    std::filesystem::path p(name);
    if (p.is_relative()) p = dir / p;
    return parse_algebra(read_file(p));
  };
}

inline AlgebraPtr resolve_reference(Cursor& c, const std::string& keyword, const AlgebraResolver& resolve) {
  if (c.done()) c.fail_end("missing '" + keyword + "'");
  const Line& l = c.next();
  if (l.tokens[0].text != keyword) fail("expected '" + keyword + " <path>'", l, 0);
  expect_count(l, 2);
  try {
    return resolve(l.tokens[1].text);
  } catch (const ParseError& e) {
    throw ParseError(l.tokens[1].text + " line " + std::to_string(e.line()) + ": " + e.message(), l.number,
                     l.tokens[1].column);
  } catch (const Error& e) {
    fail(e.what(), l, 1);
  }
}

// With check = false relation violations are left for check_module to report.
inline Module parse_module(const std::string& text, const AlgebraResolver& resolve, bool check = true) {
  Cursor c(tokenize(text));
  header(c, "module");
  AlgebraPtr a = resolve_reference(c, "algebra", resolve);
  const std::size_t start = c.done() ? c.last_line() : c.peek().number;
  Module m = read_module_body(c, a, start, check);
  if (!c.done()) fail("unknown keyword '" + c.peek().tokens[0].text + "'", c.peek(), 0);
  return m;
}

// Parses against a known algebra; the `algebra` line is still required but not opened.
inline Module parse_module(const std::string& text, const AlgebraPtr& a, bool check = true) {
  return parse_module(text, [&a](const std::string&) { return a; }, check);
}

inline std::string serialize_module(const Module& m, const std::string& algebra_path) {
  std::ostringstream os;
  os << "module v1\nalgebra " << algebra_path << "\n";
  write_module_body(os, m);
  return os.str();
}

// With check = false relation violations are left for validate to report.
inline LayeredRep parse_layered(const std::string& text, const AlgebraResolver& resolve, bool check = true) {
  Cursor c(tokenize(text));
  header(c, "layered");
  AlgebraPtr base = resolve_reference(c, "base", resolve);
  if (base->num_factors() != 1) throw Error("layered files need a single bound quiver base");
  const Scalar p = base->prime();
  QuiverSpec qs;
  std::vector<std::optional<ModulePtr>> branches;
  std::vector<std::optional<Hom>> maps;
  ContextPtr ctx;
  auto ensure_ctx = [&](const Line& l) {
    if (ctx) return;
    if (!qs.have_vertices) fail("quiver-vertices must come first", l, 0);
    try {
      ctx = make_context(base, qs.build());
    } catch (const Cyclic& e) {
      fail(e.what(), l, 0);
    }
    branches.assign(qs.vertices, std::nullopt);
    maps.assign(qs.arrows.size(), std::nullopt);
  };
  while (!c.done()) {
    const Line& l = c.next();
    const std::string& k = l.tokens[0].text;
    if (!ctx && quiver_line(qs, l, "quiver-")) continue;
    if (k == "branch") {
      ensure_ctx(l);
      expect_count(l, 2);
      std::size_t i = vertex(l, 1, qs.vertices);
      if (branches[i]) fail("branch " + l.tokens[1].text + " given twice", l, 1);
      branches[i] = share(read_module_body(c, base, l.number, check));
    } else if (k == "map") {
      ensure_ctx(l);
      expect_count(l, 2);
      auto a = ctx->factor.quiver().find_arrow(l.tokens[1].text);
      if (!a) fail("unknown quiver arrow '" + l.tokens[1].text + "'", l, 1);
      if (maps[*a]) fail("map " + l.tokens[1].text + " given twice", l, 1);
      const auto& ar = ctx->factor.quiver().arrow(*a);
      if (!branches[ar.source] || !branches[ar.target]) fail("map before both of its branches", l, 1);
      const ModulePtr& src = *branches[ar.source];
      const ModulePtr& tgt = *branches[ar.target];
      Hom h = zero_hom(src, tgt);
      std::vector<bool> seen(base->num_vertices(), false);
      while (!c.done() && c.peek().tokens[0].text == "component") {
        const Line& cl = c.next();
        expect_count(cl, 4);
        std::size_t v = vertex(cl, 1, base->num_vertices());
        if (seen[v]) fail("component given twice", cl, 1);
        seen[v] = true;
        auto r = number(cl, 2), cc = number(cl, 3);
        if (r != tgt->dim(v) || cc != src->dim(v))
          fail("component must be " + std::to_string(tgt->dim(v)) + "x" + std::to_string(src->dim(v)), cl, 2);
        h.maps[v] = read_matrix(c, p, static_cast<std::size_t>(r), static_cast<std::size_t>(cc));
      }
      if (check && !is_natural(h)) fail("map " + l.tokens[1].text + " is not a module homomorphism", l, 1);
      maps[*a] = std::move(h);
    } else {
      fail("unknown keyword '" + k + "'", l, 0);
    }
  }
  if (!ctx) {
    if (!qs.have_vertices) c.fail_end("missing 'quiver-vertices'");
    Line dummy{c.last_line(), {{"", 1}}};
    ensure_ctx(dummy);
  }
  std::vector<ModulePtr> bs;
  for (std::size_t i = 0; i < branches.size(); ++i)
    bs.push_back(branches[i] ? *branches[i] : share(Module::zero(base)));
  std::vector<Hom> hs;
  for (std::size_t a = 0; a < maps.size(); ++a) {
    const auto& ar = ctx->factor.quiver().arrow(a);
    hs.push_back(maps[a] ? *maps[a] : zero_hom(bs[ar.source], bs[ar.target]));
  }
  LayeredRep x(ctx, std::move(bs), std::move(hs));
  if (!check) return x;
  auto bad = validate(x);
  if (!bad.empty()) throw ParseError(bad.front(), c.last_line());
  return x;
}

inline std::string serialize_layered(const LayeredRep& x, const std::string& base_path) {
  const auto& ctx = *x.context();
  std::ostringstream os;
  os << "layered v1\nbase " << base_path << "\n";
  write_quiver(os, ctx.factor, "quiver-");
  for (std::size_t i = 0; i < x.branches().size(); ++i) {
    os << "branch " << i + 1 << "\n";
    write_module_body(os, *x.branch(i));
  }
  for (std::size_t a = 0; a < x.maps().size(); ++a) {
    const Hom& h = x.maps()[a];
    os << "map " << ctx.factor.quiver().arrow(a).name << "\n";
    for (std::size_t v = 0; v < h.maps.size(); ++v) {
      if (h.maps[v].is_zero()) continue;
      os << "component " << v + 1 << " " << h.maps[v].rows() << " " << h.maps[v].cols() << "\n";
      write_matrix(os, h.maps[v]);
    }
  }
  return os.str();
}

inline AlgebraPtr load_algebra(const std::filesystem::path& path) {
  try {
    return parse_algebra(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.line(), e.column(), path.string());
  }
}

inline Module load_module(const std::filesystem::path& path, bool check = true) {
  try {
    return parse_module(read_file(path), file_resolver(path.parent_path()), check);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.line(), e.column(), path.string());
  }
}

inline LayeredRep load_layered(const std::filesystem::path& path, bool check = true) {
  try {
    return parse_layered(read_file(path), file_resolver(path.parent_path()), check);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.line(), e.column(), path.string());
  }
}

}  // namespace smonkit::io
