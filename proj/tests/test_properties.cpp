#include <doctest.h>

#include <random>

#include "nilrep/affine.hpp"
#include "nilrep/catalog.hpp"
#include "nilrep/dual.hpp"
#include "nilrep/io.hpp"
#include "nilrep/quotient.hpp"
#include "nilrep/regular.hpp"

using namespace nilrep;

namespace {

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-2, 2);
  return Scalar(f, dist(rng));
}

Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  Matrix l = Matrix::identity(f, n), u = Matrix::identity(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = random_scalar(f, rng);
      u(j, i) = random_scalar(f, rng);
    }
  return l * u;
}

// The same algebra on the basis y_k = sum_i p(i, k) x_i.
LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p) {
  const Matrix pinv = inverse(p);
  LieAlgebra out(g.field(), g.dim());
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = a + 1; b < g.dim(); ++b)
      out.set_bracket(a, b, SparseVector::from_dense(pinv * bracket(g, p.column(a), p.column(b))));
  return out;
}

// A random ideal I with g^{k+1} ⊆ I ⊆ g^k (any such subspace is an ideal).
Subspace random_ideal(const LieAlgebra& g, std::mt19937_64& rng) {
  const auto lcs = lower_central_series(g);
  const std::size_t k = 1 + rng() % (lcs.size() - 1);
  std::vector<Vector> gens = lcs[k].basis();
  const auto layer = lcs[k - 1].basis();
  const std::size_t count = rng() % (layer.size() + 1);
  for (std::size_t t = 0; t < count; ++t) {
    Vector v = zero_vector(g.field(), g.dim());
    for (const auto& b : layer) {
      const Scalar c = random_scalar(g.field(), rng);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
    }
    gens.push_back(v);
  }
  return Subspace::span(g.field(), g.dim(), gens);
}

std::vector<LieAlgebra> random_algebras(const Field& f, std::mt19937_64& rng, int count) {
  const std::vector<LieAlgebra> seeds{heisenberg(f), upper_triangular(4, f), upper_triangular(5, f), free_nilpotent(2, 4, f),
                                      free_nilpotent(3, 3, f)};
  std::vector<LieAlgebra> out;
  for (int t = 0; t < count; ++t) {
    LieAlgebra g = seeds[rng() % seeds.size()];
    if (rng() % 2) {
      const Subspace ideal = random_ideal(g, rng);
      if (ideal.dim() < g.dim()) g = quotient(g, ideal).algebra;
    }
    if (rng() % 3 == 0) g = direct_sum_abelian(g, 1 + rng() % 2);
    if (g.dim() == 0) g = abelian(1, f);
    g = change_basis(g, random_invertible(f, g.dim(), rng));
    out.push_back(g);
  }
  return out;
}

void check_output(const Representation& r) {
  CHECK(is_homomorphism(r));
  CHECK(is_faithful(r));
  CHECK(has_nilpotent_matrices(r));
}

}  // namespace

TEST_CASE("random algebras are nilpotent Lie algebras") {
  std::mt19937_64 rng(101);
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(3)})
    for (const auto& g : random_algebras(f, rng, 12)) {
      CHECK(check_jacobi(g).empty());
      CHECK_NOTHROW(lower_central_series(g));
    }
}

TEST_CASE("every algorithm returns faithful representations on random algebras") {
  std::mt19937_64 rng(202);
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(3)})
    for (const auto& g : random_algebras(f, rng, 10)) {
      const Representation full = regular_unpruned(g);
      check_output(full);
      const Representation reg = algorithm_regular(g);
      check_output(reg);
      CHECK(reg.module_dim <= full.module_dim);
      const Representation quo = algorithm_quotient(g);
      check_output(quo);
      CHECK(quo.module_dim <= reg.module_dim);
      const DualModule dual = dual_module(g);
      check_output(dual.rep);
      CHECK(annihilated_subspace(dual.rep).dim() == 1);
      CHECK(annihilated_subspace(dual.rep).contains(center_image(dual.rep)));
      const AffineOutcome aff = algorithm_affine(g);
      if (aff.rep) {
        check_output(*aff.rep);
        CHECK(aff.rep->module_dim == g.dim() + 1);
      } else {
        CHECK(aff.deepest_step < g.dim());
      }
    }
}

TEST_CASE("faithfulness is decided by the center") {
  std::mt19937_64 rng(303);
  for (const auto& g : random_algebras(Field::rationals(), rng, 10)) {
    const Representation r = algorithm_regular(g);
    // Killing a central element loses faithfulness; the center sees it.
    Representation killed = r;
    const Vector z = center(g).basis().front();
    std::size_t pivot = 0;
    while (z[pivot].is_zero()) ++pivot;
    // Replace the image of x_pivot so that rho(z) = 0 while keeping the rest.
    SparseMatrix image = r.image(z).scaled(z[pivot].inverse());
    killed.matrices[pivot] = killed.matrices[pivot] - image;
    CHECK(killed.image(z).is_zero());
    CHECK_FALSE(is_faithful(killed));
    CHECK_FALSE(intersect(kernel(killed), center(g)).is_zero());
  }
}

TEST_CASE("kernel is invariant under conjugation") {
  std::mt19937_64 rng(404);
  for (const auto& g : random_algebras(Field::prime(3), rng, 8)) {
    const Representation r = algorithm_quotient(g);
    const Representation c = conjugate(r, random_invertible(g.field(), r.module_dim, rng));
    CHECK(is_homomorphism(c));
    CHECK(kernel(c) == kernel(r));
  }
}

TEST_CASE("quotient reduction reaches an idempotent fixpoint") {
  std::mt19937_64 rng(505);
  for (const auto& g : random_algebras(Field::rationals(), rng, 8)) {
    std::vector<std::size_t> dims;
    const Representation fixed = reduce_fully(regular_unpruned(g), &dims);
    for (std::size_t k = 1; k < dims.size(); ++k) CHECK(dims[k] < dims[k - 1]);
    const ReductionStep again = reduce_once(fixed);
    CHECK(again.removed.is_zero());
    CHECK(again.rep == fixed);
  }
}

TEST_CASE("affine runs are reproducible per seed") {
  std::mt19937_64 rng(606);
  for (const auto& g : random_algebras(Field::prime(3), rng, 6)) {
    AffineOptions opt;
    opt.seed = rng();
    const auto a = algorithm_affine(g, opt), b = algorithm_affine(g, opt);
    CHECK(a.rep.has_value() == b.rep.has_value());
    if (a.rep) CHECK(emit_representation(*a.rep) == emit_representation(*b.rep));
  }
}

TEST_CASE("unpruned dimension is the weighted lattice point count") {
  std::mt19937_64 rng(707);
  for (const auto& g : random_algebras(Field::rationals(), rng, 8)) {
    const AdaptedBasis ab = adapted_basis(g);
    // Count exponent vectors with sum a_i w_i <= c by dynamic programming.
    std::vector<std::size_t> ways(ab.nilpotency_class + 1, 0);
    ways[0] = 1;
    for (std::size_t w : ab.weights)
      for (std::size_t s = w; s <= ab.nilpotency_class; ++s) ways[s] += ways[s - w];
    std::size_t total = 0;
    for (auto x : ways) total += x;
    CHECK(regular_unpruned(g).module_dim == total);
  }
}
