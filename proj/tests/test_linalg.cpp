#include <doctest.h>

#include <random>

#include "nilrep/linalg.hpp"

using namespace nilrep;

namespace {

const Field kQ = Field::rationals();

Matrix mat(const Field& f, std::vector<std::vector<long>> rows) {
  std::vector<Vector> out;
  for (const auto& r : rows) {
    Vector v;
    for (long x : r) v.push_back(Scalar(f, x));
    out.push_back(v);
  }
  return Matrix::from_rows(f, out);
}

Vector vec(const Field& f, std::vector<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Scalar(f, x));
  return v;
}

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(f, dist(rng));
  return m;
}

// All vectors of F_p^n, enumerated as base-p digit strings.
std::vector<Vector> all_vectors(const Field& f, std::size_t n) {
  const long p = f.characteristic();
  std::vector<Vector> out;
  long total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  for (long code = 0; code < total; ++code) {
    Vector v;
    long c = code;
    for (std::size_t i = 0; i < n; ++i, c /= p) v.push_back(Scalar(f, c % p));
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("rref examples") {
  const auto id = rref(Matrix::identity(kQ, 3));
  CHECK(id.rank == 3);
  CHECK(id.echelon == Matrix::identity(kQ, 3));
  const auto zero = rref(Matrix(kQ, 2, 4));
  CHECK(zero.rank == 0);
  CHECK(zero.echelon.is_zero());
  const auto r = rref(mat(kQ, {{2, 4}, {1, 2}}));
  CHECK(r.rank == 1);
  CHECK(r.echelon == mat(kQ, {{1, 2}, {0, 0}}));
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref rejects entries from another field") {
  Matrix m(Field::prime(3), 1, 2);
  m(0, 0) = Scalar(Field::prime(5), 1);
  CHECK_THROWS_AS(rref(m), FieldMismatch);
}

TEST_CASE("rref is idempotent and rank-nullity holds") {
  std::mt19937_64 rng(7);
  for (const Field& f : {kQ, Field::prime(2), Field::prime(3)})
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      const Matrix m = random_matrix(f, r, c, rng, 2);
      const auto once = rref(m);
      CHECK(rref(once.echelon).echelon == once.echelon);
      CHECK(nullspace(m).dim() + once.rank == c);
    }
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace(Matrix(kQ, 3, 3)).dim() == 3);
  CHECK(nullspace(Matrix::identity(kQ, 4)).is_zero());
  const Field f2 = Field::prime(2);
  const Subspace k = nullspace(mat(f2, {{1, 1}}));
  CHECK(k == Subspace::span(f2, 2, std::vector<Vector>{vec(f2, {1, 1})}));
}

TEST_CASE("nullspace agrees with exhaustive enumeration over small prime fields") {
  std::mt19937_64 rng(11);
  for (const Field& f : {Field::prime(2), Field::prime(3)})
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t r = 1 + rng() % 3, c = 1 + rng() % 4;
      const Matrix m = random_matrix(f, r, c, rng, 2);
      const Subspace k = nullspace(m);
      std::size_t kernel_size = 0;
      for (const Vector& v : all_vectors(f, c)) {
        const bool in_kernel = is_zero(m * v);
        CHECK(k.contains(v) == in_kernel);
        kernel_size += in_kernel;
      }
      std::size_t expected = 1;
      for (std::size_t i = 0; i < k.dim(); ++i) expected *= f.characteristic();
      CHECK(kernel_size == expected);
    }
}

TEST_CASE("intersection examples") {
  const auto e = [](std::size_t n, std::size_t i) { return unit_vector(kQ, n, i); };
  const Subspace a = Subspace::span(kQ, 2, std::vector<Vector>{e(2, 0)});
  const Subspace b = Subspace::span(kQ, 2, std::vector<Vector>{e(2, 1)});
  CHECK(intersect(a, a) == a);
  CHECK(intersect(a, b).is_zero());
  const Subspace p = Subspace::span(kQ, 3, std::vector<Vector>{e(3, 0), e(3, 1)});
  const Subspace s = Subspace::span(kQ, 3, std::vector<Vector>{e(3, 1), e(3, 2)});
  CHECK(intersect(p, s) == Subspace::span(kQ, 3, std::vector<Vector>{e(3, 1)}));
  CHECK_THROWS(intersect(a, p));
}

TEST_CASE("dimension formula for sums and intersections") {
  std::mt19937_64 rng(3);
  for (const Field& f : {kQ, Field::prime(2), Field::prime(5)})
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = 1 + rng() % 5;
      const Subspace a = row_space(random_matrix(f, rng() % 4, n, rng, 1));
      const Subspace b = row_space(random_matrix(f, rng() % 4, n, rng, 1));
      const Subspace i = intersect(a, b);
      CHECK(a.dim() + b.dim() == i.dim() + sum(a, b).dim());
      CHECK(a.contains(i));
      CHECK(b.contains(i));
    }
}

TEST_CASE("complement examples") {
  const Subspace full = Subspace::full(kQ, 2);
  CHECK(complement_in(full, full).is_zero());
  CHECK(complement_in(Subspace::zero(kQ, 2), full) == full);
  const Subspace line = Subspace::span(kQ, 2, std::vector<Vector>{vec(kQ, {1, 1})});
  CHECK(complement_in(line, full) == Subspace::span(kQ, 2, std::vector<Vector>{vec(kQ, {1, 0})}));
  const Subspace e2 = Subspace::span(kQ, 2, std::vector<Vector>{vec(kQ, {0, 1})});
  CHECK_THROWS_AS(complement_in(full, e2), std::invalid_argument);
}

TEST_CASE("complement is a direct summand") {
  std::mt19937_64 rng(5);
  for (const Field& f : {kQ, Field::prime(3)})
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = 1 + rng() % 6;
      const Subspace within = row_space(random_matrix(f, 1 + rng() % 5, n, rng, 2));
      const Subspace sub = intersect(within, row_space(random_matrix(f, rng() % 5, n, rng, 2)));
      const Subspace w = complement_in(sub, within);
      CHECK(intersect(w, sub).is_zero());
      CHECK(sum(w, sub) == within);
      CHECK(complement_in(sub, within) == w);
    }
}

TEST_CASE("solve examples") {
  const auto r1 = solve(Matrix::identity(kQ, 3), vec(kQ, {4, -1, 2}));
  REQUIRE(r1.particular);
  CHECK(*r1.particular == vec(kQ, {4, -1, 2}));
  CHECK(r1.kernel.is_zero());
  const auto r2 = solve(Matrix(kQ, 2, 2), vec(kQ, {0, 0}));
  REQUIRE(r2.particular);
  CHECK(is_zero(*r2.particular));
  CHECK(r2.kernel.dim() == 2);
  const auto r3 = solve(mat(kQ, {{1, 1}}), vec(kQ, {1}));
  REQUIRE(r3.particular);
  CHECK(*r3.particular == vec(kQ, {1, 0}));
  CHECK(r3.kernel == Subspace::span(kQ, 2, std::vector<Vector>{vec(kQ, {1, -1})}));
  CHECK_FALSE(solve(Matrix(kQ, 1, 1), vec(kQ, {1})).particular);
}

TEST_CASE("solutions satisfy the system") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix a = random_matrix(kQ, 1 + rng() % 4, 1 + rng() % 4, rng, 3);
    const Vector x = random_matrix(kQ, a.cols(), 1, rng, 3).column(0);
    const auto res = solve(a, a * x);
    REQUIRE(res.particular);
    CHECK(a * *res.particular == a * x);
    for (const Vector& k : res.kernel.basis()) CHECK(is_zero(a * k));
  }
}

TEST_CASE("inverse and sparse products") {
  const Matrix m = mat(kQ, {{2, 1}, {1, 1}});
  CHECK(m * inverse(m) == Matrix::identity(kQ, 2));
  CHECK_THROWS_AS(inverse(mat(kQ, {{1, 2}, {2, 4}})), std::domain_error);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random_matrix(kQ, 3, 4, rng, 2), b = random_matrix(kQ, 4, 2, rng, 2);
    CHECK((SparseMatrix::from_dense(a) * SparseMatrix::from_dense(b)).to_dense() == a * b);
    CHECK(SparseMatrix::from_dense(a).transpose().to_dense() == a.transpose());
  }
}

TEST_CASE("echelon builder spans what was inserted") {
  EchelonBuilder eb(kQ, 3);
  CHECK(eb.insert(SparseVector::from_dense(vec(kQ, {1, 1, 0}))));
  CHECK(eb.insert(SparseVector::from_dense(vec(kQ, {0, 1, 1}))));
  CHECK_FALSE(eb.insert(SparseVector::from_dense(vec(kQ, {1, 2, 1}))));
  CHECK(eb.rank() == 2);
  CHECK(eb.sift(SparseVector::from_dense(vec(kQ, {1, 0, -1}))).empty());
  CHECK_FALSE(eb.sift(SparseVector::unit(2)).empty());
}
