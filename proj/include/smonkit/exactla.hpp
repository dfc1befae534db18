#pragma once

// Exact dense linear algebra over a prime field F_p.
//
// Matrices are row-major, entries are residues in [0, p). Zero-sized shapes are
// legal everywhere and compose as expected. Subspaces are stored by a basis in
// reduced row echelon form, so two subspaces are equal iff their bases are
// equal as matrices.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "smonkit/error.hpp"

namespace smonkit {

using Scalar = std::uint32_t;
using Vector = std::vector<Scalar>;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace field {

inline Scalar reduce(long long v, Scalar p) {
  long long r = v % static_cast<long long>(p);
  return static_cast<Scalar>(r < 0 ? r + p : r);
}
inline Scalar add(Scalar a, Scalar b, Scalar p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Scalar>(s >= p ? s - p : s);
}
inline Scalar sub(Scalar a, Scalar b, Scalar p) { return a >= b ? a - b : a + (p - b); }
inline Scalar neg(Scalar a, Scalar p) { return a == 0 ? 0 : p - a; }
inline Scalar mul(Scalar a, Scalar b, Scalar p) {
  return static_cast<Scalar>((std::uint64_t{a} * b) % p);
}
inline Scalar pow(Scalar a, std::uint64_t e, Scalar p) {
  Scalar r = 1 % p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}
// Multiplicative inverse of a nonzero residue (Fermat).
inline Scalar inv(Scalar a, Scalar p) { return pow(a, p - 2, p); }

}  // namespace field

class Matrix {
 public:
  Matrix() = default;
  Matrix(Scalar p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    thread_local Scalar last_checked = 2;
    if (p != last_checked) {
      if (!is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
      last_checked = p;
    }
  }

  static Matrix identity(Scalar p, std::size_t n) {
    Matrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
  }

  // Entries may be arbitrary integers; they are reduced mod p.
  static Matrix from_rows(Scalar p, std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    Matrix m(p, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw ShapeMismatch("ragged matrix literal");
      std::size_t j = 0;
      for (long long v : row) m.data_[i * c + j++] = field::reduce(v, p);
      ++i;
    }
    return m;
  }

  static Matrix from_values(Scalar p, std::size_t rows, std::size_t cols,
                            std::span<const long long> values) {
    if (values.size() != rows * cols) throw ShapeMismatch("value count does not match shape");
    Matrix m(p, rows, cols);
    for (std::size_t k = 0; k < values.size(); ++k) m.data_[k] = field::reduce(values[k], p);
    return m;
  }

  static Matrix column(Scalar p, const Vector& v) {
    Matrix m(p, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.data_[i] = v[i] % p;
    return m;
  }

  Scalar prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, long long v) { data_[r * cols_ + c] = field::reduce(v, p_); }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Scalar>& data() const { return data_; }

  Vector col(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  bool is_zero() const {
    for (Scalar v : data_)
      if (v) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(p_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    check_prime(o);
    if (cols_ != o.rows_) throw ShapeMismatch("matrix product shape mismatch");
    Matrix out(p_, rows_, o.cols_);
    if (p_ == 2) {
      for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
          if (data_[i * cols_ + k]) {
            const Scalar* src = o.data_.data() + k * o.cols_;
            Scalar* dst = out.data_.data() + i * o.cols_;
            for (std::size_t j = 0; j < o.cols_; ++j) dst[j] ^= src[j];
          }
      return out;
    }
    std::vector<std::uint64_t> acc(o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < cols_; ++k) {
        std::uint64_t a = data_[i * cols_ + k];
        if (!a) continue;
        const Scalar* src = o.data_.data() + k * o.cols_;
        for (std::size_t j = 0; j < o.cols_; ++j) acc[j] = (acc[j] + a * src[j]) % p_;
      }
      for (std::size_t j = 0; j < o.cols_; ++j) out.data_[i * o.cols_ + j] = static_cast<Scalar>(acc[j]);
    }
    return out;
  }

  Vector operator*(const Vector& v) const {
    if (v.size() != cols_) throw ShapeMismatch("matrix-vector shape mismatch");
    Vector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) acc = (acc + std::uint64_t{data_[i * cols_ + k]} * v[k]) % p_;
      out[i] = static_cast<Scalar>(acc);
    }
    return out;
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix out = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field::add(data_[k], o.data_[k], p_);
    return out;
  }

  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix out = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field::sub(data_[k], o.data_[k], p_);
    return out;
  }

  Matrix scaled(Scalar s) const {
    Matrix out = *this;
    for (auto& v : out.data_) v = field::mul(v, s % p_, p_);
    return out;
  }

  bool operator==(const Matrix& o) const {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeMismatch("block out of range");
    Matrix out(p_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) out.data_[r * nc + c] = (*this)(r0 + r, c0 + c);
    return out;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    check_prime(b);
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeMismatch("block out of range");
    for (std::size_t r = 0; r < b.rows_; ++r)
      for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  // Keeps the listed rows, in the given order.
  Matrix select_rows(std::span<const std::size_t> idx) const {
    Matrix out(p_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(idx[i], c);
    return out;
  }

  Matrix select_cols(std::span<const std::size_t> idx) const {
    Matrix out(p_, rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < idx.size(); ++j) out(r, j) = (*this)(r, idx[j]);
    return out;
  }

  void check_prime(const Matrix& o) const {
    if (p_ != o.p_) throw PrimeMismatch("matrices over F_" + std::to_string(p_) + " and F_" + std::to_string(o.p_));
  }

 private:
  void check_same_shape(const Matrix& o) const {
    check_prime(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix shapes differ");
  }

  Scalar p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

inline std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << "]";
  }
  return os << "]";
}

inline Matrix hstack(const std::vector<Matrix>& parts, Scalar p, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& m : parts) {
    if (m.rows() != rows) throw ShapeMismatch("hstack row mismatch");
    cols += m.cols();
  }
  Matrix out(p, rows, cols);
  std::size_t c0 = 0;
  for (const auto& m : parts) {
    out.set_block(0, c0, m);
    c0 += m.cols();
  }
  return out;
}

inline Matrix vstack(const std::vector<Matrix>& parts, Scalar p, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& m : parts) {
    if (m.cols() != cols) throw ShapeMismatch("vstack column mismatch");
    rows += m.rows();
  }
  Matrix out(p, rows, cols);
  std::size_t r0 = 0;
  for (const auto& m : parts) {
    out.set_block(r0, 0, m);
    r0 += m.rows();
  }
  return out;
}

// Block diagonal sum.
inline Matrix direct_sum(const std::vector<Matrix>& parts, Scalar p) {
  std::size_t rows = 0, cols = 0;
  for (const auto& m : parts) {
    rows += m.rows();
    cols += m.cols();
  }
  Matrix out(p, rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& m : parts) {
    out.set_block(r0, c0, m);
    r0 += m.rows();
    c0 += m.cols();
  }
  return out;
}

struct Rref {
  Matrix form;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form by Gauss-Jordan elimination. Only the first
// `limit_cols` columns are used as pivot candidates (all by default).
inline Rref rref(Matrix m, std::size_t limit_cols = static_cast<std::size_t>(-1)) {
  const Scalar p = m.prime();
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t pc = std::min(cols, limit_cols);
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pc && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      auto a = m.row(piv), b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.row(r);
    if (Scalar lead = prow[c]; lead != 1) {
      Scalar li = field::inv(lead, p);
      for (std::size_t j = c; j < cols; ++j) prow[j] = field::mul(prow[j], li, p);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto row = m.row(i);
      Scalar f = row[c];
      if (!f) continue;
      if (p == 2) {
        for (std::size_t j = c; j < cols; ++j) row[j] ^= prow[j];
      } else {
        std::uint64_t nf = p - f;
        for (std::size_t j = c; j < cols; ++j)
          row[j] = static_cast<Scalar>((row[j] + nf * prow[j]) % p);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.form = std::move(m);
  return out;
}

inline std::size_t rank(const Matrix& m) {
  // Eliminate along the shorter side.
  if (m.rows() > m.cols()) return rref(m.transpose()).rank;
  return rref(m).rank;
}

// A subspace of F_p^n held by its canonical (RREF) basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Scalar p, std::size_t ambient) : basis_(p, 0, ambient) {}

  // Span of the rows of `rows`.
  static Subspace span_rows(const Matrix& rows) {
    Rref r = rref(rows);
    Subspace s;
    s.basis_ = r.form.block(0, 0, r.rank, rows.cols());
    s.pivots_ = std::move(r.pivots);
    return s;
  }
  // Span of the columns of `cols`.
  static Subspace span_cols(const Matrix& cols) { return span_rows(cols.transpose()); }

  static Subspace full(Scalar p, std::size_t n) { return span_rows(Matrix::identity(p, n)); }

  Scalar prime() const { return basis_.prime(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Basis vectors as columns (ambient x dim).
  Matrix basis_columns() const { return basis_.transpose(); }

  // Reduces v against the basis; the result is zero iff v lies in the span.
  Vector reduce(Vector v) const {
    const Scalar p = prime();
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      Scalar f = v[pivots_[i]];
      if (!f) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = field::sub(v[j], field::mul(f, basis_(i, j), p), p);
    }
    return v;
  }

  bool contains(const Vector& v) const {
    if (v.size() != ambient()) throw AmbientMismatch("vector length differs from ambient dimension");
    for (Scalar x : reduce(v))
      if (x) return false;
    return true;
  }

  // Coordinates of a member vector in the canonical basis.
  Vector coordinates(const Vector& v) const {
    Vector c(pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  bool contains(const Subspace& o) const {
    check_ambient(o);
    for (std::size_t i = 0; i < o.dim(); ++i) {
      auto r = o.basis_.row(i);
      if (!contains(Vector(r.begin(), r.end()))) return false;
    }
    return true;
  }

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

  void check_ambient(const Subspace& o) const {
    if (ambient() != o.ambient())
      throw AmbientMismatch("ambient dimensions " + std::to_string(ambient()) + " and " +
                            std::to_string(o.ambient()));
    basis_.check_prime(o.basis_);
  }

 private:
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace kernel_basis(const Matrix& m) {
  const Scalar p = m.prime();
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix basis(p, free.size(), m.cols());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(k, free[k]) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) basis(k, r.pivots[i]) = field::neg(r.form(i, free[k]), p);
  }
  return Subspace::span_rows(basis);
}

inline Subspace image_basis(const Matrix& m) { return Subspace::span_cols(m); }

inline Subspace subspace_sum(const std::vector<Subspace>& parts) {
  if (parts.empty()) throw AmbientMismatch("empty subspace sum has no ambient space");
  for (const auto& s : parts) parts.front().check_ambient(s);
  std::vector<Matrix> bases;
  for (const auto& s : parts) bases.push_back(s.basis());
  return Subspace::span_rows(vstack(bases, parts.front().prime(), parts.front().ambient()));
}

inline Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  a.check_ambient(b);
  const Scalar p = a.prime();
  const std::size_t n = a.ambient();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(p, n);
  // x = A^T s = B^T t  <=>  [A^T | -B^T] (s, t) = 0.
  Matrix at = a.basis().transpose();
  Matrix nbt = b.basis().transpose().scaled(p - 1);
  Subspace k = kernel_basis(hstack({at, nbt}, p, n));
  Matrix s = k.basis().block(0, 0, k.dim(), a.dim());
  return Subspace::span_rows(s * a.basis());
}

// Some x with m x = b, or nullopt when the system is inconsistent. Free
// variables are set to zero.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw ShapeMismatch("solve: right-hand side length differs from row count");
  const Scalar p = m.prime();
  Rref r = rref(hstack({m, Matrix::column(p, b)}, p, m.rows()), m.cols());
  for (std::size_t i = r.rank; i < m.rows(); ++i)
    if (r.form(i, m.cols())) return std::nullopt;
  Vector x(m.cols(), 0);
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.form(i, m.cols());
  return x;
}

// Some X with m X = b (all columns at once), or nullopt.
inline std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows()) throw ShapeMismatch("solve: right-hand side row count differs");
  const Scalar p = m.prime();
  Rref r = rref(hstack({m, b}, p, m.rows()), m.cols());
  for (std::size_t i = r.rank; i < m.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (r.form(i, m.cols() + j)) return std::nullopt;
  Matrix x(p, m.cols(), b.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[i], j) = r.form(i, m.cols() + j);
  return x;
}

// Kronecker product; row (i_a, i_b) sits at i_a * rows(b) + i_b, columns likewise.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  a.check_prime(b);
  Matrix out(a.prime(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      Scalar x = a(ia, ja);
      if (!x) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
          out(ia * b.rows() + ib, ja * b.cols() + jb) = field::mul(x, b(ib, jb), a.prime());
    }
  return out;
}

}  // namespace smonkit
