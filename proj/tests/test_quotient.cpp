#include <doctest.h>

#include "nilrep/catalog.hpp"
#include "nilrep/quotient.hpp"
#include "nilrep/regular.hpp"

using namespace nilrep;

TEST_CASE("Heisenberg reduction steps") {
  const Representation full = regular_unpruned(heisenberg());
  const ReductionStep s1 = reduce_once(full);
  CHECK(s1.annihilated.dim() == 4);
  CHECK(s1.center_image.dim() == 1);
  CHECK(s1.removed.dim() == 3);
  CHECK(s1.rep.module_dim == 4);
  CHECK(is_homomorphism(s1.rep));
  const ReductionStep s2 = reduce_once(s1.rep);
  CHECK(s2.removed.dim() == 1);
  CHECK(s2.rep.module_dim == 3);
  std::vector<std::size_t> dims;
  const Representation fixed = reduce_fully(full, &dims);
  CHECK(dims == std::vector<std::size_t>{7, 4, 3});
  CHECK(is_faithful(fixed));
  CHECK(reduce_once(fixed).removed.is_zero());
}

TEST_CASE("Quotient output") {
  const Representation h = algorithm_quotient(heisenberg());
  CHECK(h.module_dim == 3);
  CHECK(h.provenance.algorithm == Algorithm::Quotient);
  for (const auto& g : {upper_triangular(4), upper_triangular(5, Field::prime(2)), free_nilpotent(2, 4),
                        free_nilpotent(3, 3), direct_sum_abelian(upper_triangular(4), 2)}) {
    const Representation r = algorithm_quotient(g);
    CHECK(is_homomorphism(r));
    CHECK(is_faithful(r));
    CHECK(r.module_dim <= algorithm_regular(g).module_dim);
    // At the fixpoint every annihilated vector comes from the center.
    const auto step = reduce_once(r);
    CHECK(step.removed.is_zero());
    CHECK(step.center_image.contains(step.annihilated));
  }
}

TEST_CASE("quotient by zero is the identity") {
  const Representation r = algorithm_regular(heisenberg());
  CHECK(quotient_module(r, Subspace::zero(Field::rationals(), r.module_dim)) == r);
}

TEST_CASE("published Quotient dimension") {
  CHECK(algorithm_quotient(upper_triangular(4, Field::prime(2))).module_dim == 5);
}
