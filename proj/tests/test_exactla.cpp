#include <gtest/gtest.h>

#include <set>

#include "smonkit/exactla.hpp"
#include "smonkit/random.hpp"

using namespace smonkit;

namespace {

// Every vector of F_p^n, in lexicographic order.
std::vector<Vector> all_vectors(Scalar p, std::size_t n) {
  std::vector<Vector> out{Vector(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vector> next;
    for (const auto& v : out)
      for (Scalar a = 0; a < p; ++a) {
        Vector w = v;
        w[i] = a;
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

std::size_t log_p(std::size_t size, Scalar p) {
  std::size_t k = 0;
  while (size > 1) {
    size /= p;
    ++k;
  }
  return k;
}

// Rank by counting the image {m x}.
std::size_t brute_rank(const Matrix& m) {
  std::set<Vector> img;
  for (const auto& x : all_vectors(m.prime(), m.cols())) img.insert(m * x);
  return log_p(img.size(), m.prime());
}

std::size_t brute_kernel_dim(const Matrix& m) {
  std::size_t count = 0;
  for (const auto& x : all_vectors(m.prime(), m.cols())) {
    auto y = m * x;
    count += std::all_of(y.begin(), y.end(), [](Scalar s) { return s == 0; });
  }
  return log_p(count, m.prime());
}

Matrix random_matrix(Rng& rng, Scalar p, std::size_t r, std::size_t c) {
  Matrix m(p, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform_scalar(rng, p);
  return m;
}

// Low-rank random matrix: product of two thin factors.
Matrix random_low_rank(Rng& rng, Scalar p, std::size_t r, std::size_t c) {
  std::size_t k = uniform_index(rng, std::min(r, c) + 1);
  return random_matrix(rng, p, r, k) * random_matrix(rng, p, k, c);
}

Subspace random_subspace(Rng& rng, Scalar p, std::size_t n) {
  return Subspace::span_rows(random_low_rank(rng, p, 1 + uniform_index(rng, n), n));
}

}  // namespace

TEST(Rref, DuplicateRowsOverF2) {
  auto r = rref(Matrix::from_rows(2, {{1, 1}, {1, 1}}));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.form, Matrix::from_rows(2, {{1, 1}, {0, 0}}));
}

TEST(Rref, IdentityIsFixed) {
  for (std::size_t n : {1u, 3u, 5u}) {
    auto r = rref(Matrix::identity(3, n));
    EXPECT_EQ(r.form, Matrix::identity(3, n));
    EXPECT_EQ(r.rank, n);
  }
}

TEST(Rref, SingularOverF3) {
  // det = 1*1 - 2*2 = -3 = 0 mod 3.
  Matrix m = Matrix::from_rows(3, {{1, 2}, {2, 1}});
  const long long det = (1 * 1 - 2 * 2) % 3;
  EXPECT_EQ(det, 0);
  EXPECT_EQ(rank(m), brute_rank(m));
  EXPECT_EQ(rank(m), 1u);
}

TEST(Rref, FullRankOverF5) {
  Matrix m = Matrix::from_rows(5, {{1, 2}, {2, 1}});  // det = -3 = 2 mod 5
  EXPECT_EQ(rank(m), 2u);
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(Matrix(2, 2, 2)), Subspace::full(2, 2));
  EXPECT_EQ(kernel_basis(Matrix::identity(2, 2)).dim(), 0u);
  auto k = kernel_basis(Matrix::from_rows(2, {{1, 1}}));
  EXPECT_EQ(k, Subspace::span_rows(Matrix::from_rows(2, {{1, 1}})));
  EXPECT_EQ(brute_kernel_dim(Matrix::from_rows(2, {{1, 1}})), 1u);
}

TEST(Image, Examples) {
  EXPECT_EQ(image_basis(Matrix::identity(2, 3)), Subspace::full(2, 3));
  EXPECT_EQ(image_basis(Matrix(2, 3, 2)).dim(), 0u);
  EXPECT_EQ(image_basis(Matrix::from_rows(2, {{1}, {1}})), Subspace::span_rows(Matrix::from_rows(2, {{1, 1}})));
}

TEST(Subspaces, SumAndIntersection) {
  auto e1 = Subspace::span_rows(Matrix::from_rows(2, {{1, 0}}));
  auto e2 = Subspace::span_rows(Matrix::from_rows(2, {{0, 1}}));
  auto d = Subspace::span_rows(Matrix::from_rows(2, {{1, 1}}));
  EXPECT_EQ(subspace_sum({e1, e2}), Subspace::full(2, 2));
  EXPECT_EQ(subspace_intersect(e1, e2).dim(), 0u);
  EXPECT_EQ(subspace_sum({d, d}), d);
  EXPECT_EQ(subspace_intersect(d, e1).dim(), 0u);
  EXPECT_THROW(subspace_sum({}), AmbientMismatch);
  EXPECT_THROW(subspace_intersect(e1, Subspace::full(2, 3)), AmbientMismatch);
}

TEST(Solve, Examples) {
  Vector b{1, 0, 1};
  EXPECT_EQ(*solve(Matrix::identity(2, 3), b), b);
  EXPECT_FALSE(solve(Matrix(2, 2, 2), Vector{1, 0}).has_value());
  auto x = solve(Matrix::from_rows(2, {{1, 1}}), Vector{1});
  ASSERT_TRUE(x.has_value());
  EXPECT_TRUE((*x == Vector{1, 0}) || (*x == Vector{0, 1}));
  EXPECT_THROW(solve(Matrix::identity(2, 2), Vector{1}), ShapeMismatch);
}

TEST(Kron, Examples) {
  Matrix m = Matrix::from_rows(3, {{1, 2}, {0, 1}});
  Matrix expect(3, 4, 4);
  expect.set_block(0, 0, m);
  expect.set_block(2, 2, m);
  EXPECT_EQ(kron(Matrix::identity(3, 2), m), expect);
  EXPECT_EQ(kron(m, Matrix::identity(3, 1)), m);
}

TEST(Matrix, PrimeChecks) {
  EXPECT_THROW(Matrix(4, 1, 1), Error);
  EXPECT_THROW(Matrix::identity(2, 2) * Matrix::identity(3, 2), PrimeMismatch);
  EXPECT_THROW(Matrix(2, 2, 3) * Matrix(2, 2, 3), ShapeMismatch);
}

TEST(Matrix, UnreducedEntriesAreReduced) {
  EXPECT_EQ(Matrix::from_rows(3, {{4, -1}}), Matrix::from_rows(3, {{1, 2}}));
}

// Property tests over F_2, F_3 and F_5 on random shapes up to 6x6.

class Props : public ::testing::TestWithParam<Scalar> {};

TEST_P(Props, RankMatchesEnumeration) {
  Rng rng = make_rng(11, GetParam());
  for (int t = 0; t < 150; ++t) {
    Matrix m = random_low_rank(rng, GetParam(), 1 + uniform_index(rng, 4), 1 + uniform_index(rng, 4));
    ASSERT_EQ(rank(m), brute_rank(m)) << m;
    ASSERT_EQ(kernel_basis(m).dim(), brute_kernel_dim(m)) << m;
  }
}

TEST_P(Props, RankDualityAndNullity) {
  Rng rng = make_rng(12, GetParam());
  for (int t = 0; t < 300; ++t) {
    Matrix m = random_low_rank(rng, GetParam(), 1 + uniform_index(rng, 6), 1 + uniform_index(rng, 6));
    ASSERT_EQ(rank(m), rank(m.transpose()));
    ASSERT_EQ(kernel_basis(m).dim() + rank(m), m.cols());
    Matrix k = kernel_basis(m).basis_columns();
    ASSERT_TRUE((m * k).is_zero());
  }
}

TEST_P(Props, GrassmannIdentity) {
  Rng rng = make_rng(13, GetParam());
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 1 + uniform_index(rng, 6);
    auto u = random_subspace(rng, GetParam(), n), w = random_subspace(rng, GetParam(), n);
    auto s = subspace_sum({u, w});
    auto i = subspace_intersect(u, w);
    ASSERT_EQ(u.dim() + w.dim(), s.dim() + i.dim());
    ASSERT_TRUE(u.contains(i) && w.contains(i) && s.contains(u) && s.contains(w));
  }
}

TEST_P(Props, IntersectionMatchesEnumeration) {
  Rng rng = make_rng(14, GetParam());
  for (int t = 0; t < 80; ++t) {
    std::size_t n = 1 + uniform_index(rng, 3);
    auto u = random_subspace(rng, GetParam(), n), w = random_subspace(rng, GetParam(), n);
    std::size_t count = 0;
    for (const auto& v : all_vectors(GetParam(), n)) count += u.contains(v) && w.contains(v);
    ASSERT_EQ(subspace_intersect(u, w).dim(), log_p(count, GetParam()));
  }
}

TEST_P(Props, CanonicalFormIsUnique) {
  Rng rng = make_rng(15, GetParam());
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 1 + uniform_index(rng, 6);
    Matrix rows = random_matrix(rng, GetParam(), 1 + uniform_index(rng, 5), n);
    // Same span from a random invertible recombination plus an extra redundant row.
    std::size_t r = rows.rows();
    Matrix g;
    do g = random_matrix(rng, GetParam(), r, r);
    while (rank(g) != r);
    Matrix other = vstack({g * rows, random_matrix(rng, GetParam(), 1, r) * rows}, GetParam(), n);
    ASSERT_EQ(Subspace::span_rows(rows), Subspace::span_rows(other));
    ASSERT_EQ(Subspace::span_rows(rows).basis(), Subspace::span_rows(other).basis());
  }
}

TEST_P(Props, KronRankIsMultiplicative) {
  Rng rng = make_rng(16, GetParam());
  for (int t = 0; t < 200; ++t) {
    Matrix a = random_low_rank(rng, GetParam(), 1 + uniform_index(rng, 3), 1 + uniform_index(rng, 3));
    Matrix b = random_low_rank(rng, GetParam(), 1 + uniform_index(rng, 3), 1 + uniform_index(rng, 3));
    Matrix c = random_low_rank(rng, GetParam(), 1 + uniform_index(rng, 2), 1 + uniform_index(rng, 2));
    ASSERT_EQ(rank(kron(a, b)), rank(a) * rank(b));
    ASSERT_EQ(kron(kron(a, b), c), kron(a, kron(b, c)));
  }
}

TEST_P(Props, SolveAndCoordinates) {
  Rng rng = make_rng(17, GetParam());
  for (int t = 0; t < 300; ++t) {
    Matrix m = random_low_rank(rng, GetParam(), 1 + uniform_index(rng, 5), 1 + uniform_index(rng, 5));
    Vector x0 = random_matrix(rng, GetParam(), m.cols(), 1).col(0);
    Vector b = m * x0;
    auto x = solve(m, b);
    ASSERT_TRUE(x.has_value());
    ASSERT_EQ(m * *x, b);
    auto s = image_basis(m);
    Vector c = s.coordinates(b);
    ASSERT_EQ(s.basis().transpose() * c, b);
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, Props, ::testing::Values(2u, 3u, 5u));
