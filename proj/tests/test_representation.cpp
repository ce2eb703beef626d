#include <doctest.h>

#include <random>

#include "nilrep/catalog.hpp"
#include "nilrep/regular.hpp"
#include "nilrep/representation.hpp"

using namespace nilrep;

namespace {

const Field kQ = Field::rationals();

Representation zero_rep(const LieAlgebra& g, std::size_t n) {
  Representation r;
  r.algebra = g;
  r.module_dim = n;
  r.matrices.assign(g.dim(), SparseMatrix(g.field(), n, n));
  return r;
}

Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  // Unit lower times unit upper triangular: always invertible.
  std::uniform_int_distribution<long> dist(-2, 2);
  Matrix l = Matrix::identity(f, n), u = Matrix::identity(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = Scalar(f, dist(rng));
      u(j, i) = Scalar(f, dist(rng));
    }
  return l * u;
}


// Generator names of a module built on an algebra whose adapted basis is
// the input basis itself (true for Heisenberg and abelian algebras).
std::vector<std::string> generator_names(const LieAlgebra& g, const RegularModule& mod) {
  REQUIRE(mod.basis.change_of_basis == Matrix::identity(g.field(), g.dim()));
  std::vector<std::string> out;
  for (std::size_t k : mod.order) out.push_back(g.names()[k]);
  return out;
}

}  // namespace

TEST_CASE("homomorphism check") {
  const LieAlgebra h = heisenberg();
  Representation r = algorithm_regular(h);
  CHECK(is_homomorphism(r));
  CHECK(is_homomorphism(zero_rep(h, 4)));
  r.matrices[2] = r.matrices[2].scaled(Scalar(2));
  const auto fail = first_homomorphism_failure(r);
  REQUIRE(fail);
  CHECK(*fail == std::pair<std::size_t, std::size_t>{0, 1});
}

TEST_CASE("kernel and faithfulness") {
  const LieAlgebra h = heisenberg();
  CHECK(kernel(zero_rep(h, 2)) == Subspace::full(kQ, 3));
  CHECK_FALSE(is_faithful(zero_rep(h, 2)));
  CHECK(kernel(algorithm_regular(h)).is_zero());
  // A representation of h / <z> extended by M_z = 0 has kernel <z>.
  const Representation ab = algorithm_regular(abelian(2));
  Representation ext = zero_rep(h, ab.module_dim);
  ext.matrices[0] = ab.matrices[0];
  ext.matrices[1] = ab.matrices[1];
  CHECK(is_homomorphism(ext));
  CHECK(kernel(ext) == Subspace::span(kQ, 3, std::vector<Vector>{unit_vector(kQ, 3, 2)}));
}

TEST_CASE("annihilated subspace and center image of the full Heisenberg module") {
  const RegularModule mod = regular_module(heisenberg(), false);
  const Representation r = module_representation(heisenberg(), mod, Algorithm::Unpruned);
  const auto& u = mod.uea;
  const auto names = generator_names(heisenberg(), mod);
  auto span_of = [&](std::vector<std::string> wanted) {
    std::vector<Vector> vs;
    for (std::size_t m = 0; m < u.monomials().size(); ++m)
      for (const auto& w : wanted)
        if (to_string(u.monomials()[m], names) == w) vs.push_back(unit_vector(kQ, r.module_dim, m));
    REQUIRE(vs.size() == wanted.size());
    return Subspace::span(kQ, r.module_dim, vs);
  };
  CHECK(annihilated_subspace(r) == span_of({"z", "x^2", "x*y", "y^2"}));
  CHECK(center_image(r) == span_of({"z"}));
  CHECK(annihilated_subspace(zero_rep(heisenberg(), 3)) == Subspace::full(kQ, 3));
  CHECK(center_image(zero_rep(abelian(2), 2)).is_zero());
}

TEST_CASE("kernel is invariant under conjugation") {
  std::mt19937_64 rng(21);
  for (const auto& g : {heisenberg(), upper_triangular(4), free_nilpotent(2, 3)}) {
    Representation r = algorithm_regular(g);
    const Matrix p = random_invertible(g.field(), r.module_dim, rng);
    const Representation c = conjugate(r, p);
    CHECK(is_homomorphism(c));
    CHECK(kernel(c) == kernel(r));
    // Degenerate case: kill a central element and compare again.
    Representation killed = r;
    const Subspace z = center(g);
    const Vector zv = z.basis().front();
    for (std::size_t k = 0; k < g.dim(); ++k)
      if (!zv[k].is_zero()) {
        killed.matrices[k] = SparseMatrix(g.field(), r.module_dim, r.module_dim);
        break;
      }
    CHECK(kernel(conjugate(killed, p)) == kernel(killed));
  }
}

TEST_CASE("faithful iff the center acts faithfully") {
  for (const auto& g : {heisenberg(), upper_triangular(4), free_nilpotent(2, 4), upper_triangular(5, Field::prime(2))}) {
    const Representation full = algorithm_regular(g);
    CHECK(is_faithful(full));
    CHECK(intersect(kernel(full), center(g)).is_zero());
    const Representation zero = zero_rep(g, 2);
    CHECK_FALSE(intersect(kernel(zero), center(g)).is_zero());
    CHECK_FALSE(is_faithful(zero));
  }
}

TEST_CASE("matrix nilpotency") {
  CHECK(has_nilpotent_matrices(algorithm_regular(upper_triangular(4))));
  Representation r = zero_rep(abelian(1), 1);
  r.matrices[0].set(0, 0, Scalar(kQ, 1));
  CHECK_FALSE(has_nilpotent_matrices(r));
}
