#include <doctest.h>

#include <algorithm>
#include <set>

#include "nilrep/catalog.hpp"
#include "nilrep/regular.hpp"

using namespace nilrep;

namespace {

// Partitions of j by explicit enumeration of non-increasing part lists.
std::size_t count_partitions(std::size_t j, std::size_t max_part) {
  if (j == 0) return 1;
  std::size_t n = 0;
  for (std::size_t p = std::min(j, max_part); p >= 1; --p) n += count_partitions(j - p, p);
  return n;
}

// Generator names of a module built on an algebra whose adapted basis is
// the input basis itself (true for Heisenberg and abelian algebras).
std::vector<std::string> generator_names(const LieAlgebra& g, const RegularModule& mod) {
  REQUIRE(mod.basis.change_of_basis == Matrix::identity(g.field(), g.dim()));
  std::vector<std::string> out;
  for (std::size_t k : mod.order) out.push_back(g.names()[k]);
  return out;
}

std::set<std::string> names_of(const RegularModule& mod, const std::vector<std::size_t>& ms) {
  const auto names = generator_names(heisenberg(), mod);
  std::set<std::string> out;
  for (auto m : ms) out.insert(to_string(mod.uea.monomials()[m], names));
  return out;
}

}  // namespace

TEST_CASE("partition numbers") {
  CHECK(partitions(0) == 1);
  CHECK(partitions(1) == 1);
  CHECK(partitions(5) == 7);
  for (std::size_t j = 0; j <= 20; ++j) CHECK(partitions(j) == count_partitions(j, j));
}

TEST_CASE("nu values") {
  CHECK(nu(3, 2) == 7);
  for (std::size_t d = 0; d <= 6; ++d) CHECK(nu(d, 0) == 1);
  CHECK(nu(6, 3) == 20 * 1 + 10 * 1 + 4 * 2 + 1 * 3);
  CHECK(nu(6, 3) == 41);
  CHECK_THROWS(nu(2, 3));
}

TEST_CASE("unpruned module") {
  const auto h = regular_unpruned(heisenberg());
  CHECK(h.module_dim == 7);
  CHECK(is_homomorphism(h));
  CHECK(is_faithful(h));
  const auto a = regular_unpruned(abelian(1));
  CHECK(a.module_dim == 2);
  CHECK(is_faithful(a));
  // U_4 has weights (1,1,1,2,2,3): the PBW count is 29, not nu(6,3) = 41.
  CHECK(regular_unpruned(upper_triangular(4)).module_dim == 29);
}

TEST_CASE("Heisenberg pruning narrative") {
  const RegularModule mod = regular_module(heisenberg(), true);
  REQUIRE(mod.removed_per_sweep.size() == 2);
  CHECK(names_of(mod, mod.removed_per_sweep[0]) == std::set<std::string>{"x^2", "x*y", "y^2"});
  CHECK(names_of(mod, mod.removed_per_sweep[1]) == std::set<std::string>{"y"});
  CHECK(names_of(mod, mod.uea.active()) == std::set<std::string>{"1", "x", "z"});
  const auto r = algorithm_regular(heisenberg());
  CHECK(r.module_dim == 3);
  CHECK(is_homomorphism(r));
  CHECK(is_faithful(r));
}

TEST_CASE("abelian line keeps everything") {
  const RegularModule mod = regular_module(abelian(1), true);
  CHECK(mod.uea.active().size() == 2);
  CHECK(mod.removed_per_sweep.empty());
}

TEST_CASE("pbw order lists weight layers from the top") {
  CHECK(pbw_order({1, 1, 2}) == std::vector<std::size_t>{2, 0, 1});
  CHECK(pbw_order({1, 1, 1, 2, 2, 3}) == std::vector<std::size_t>{5, 3, 4, 0, 1, 2});
}

TEST_CASE("pruning invariants") {
  for (const auto& g : {heisenberg(), upper_triangular(4), upper_triangular(5, Field::prime(3)), free_nilpotent(2, 4),
                        free_nilpotent(3, 3), direct_sum_abelian(heisenberg(), 1)}) {
    const RegularModule full = regular_module(g, false);
    const RegularModule pruned = regular_module(g, true);
    const auto keep = protected_monomials(full.uea, full.central);
    for (auto m : keep) CHECK(pruned.uea.is_active(m));
    CHECK(pruned.uea.active().size() <= full.uea.active().size());
    std::vector<std::vector<std::size_t>> again;
    const TruncatedUEA twice = prune(pruned.uea, pruned.central, &again);
    CHECK(again.empty());
    CHECK(twice.active() == pruned.uea.active());
    const auto r = algorithm_regular(g);
    CHECK(is_homomorphism(r));
    CHECK(is_faithful(r));
    CHECK(has_nilpotent_matrices(r));
  }
}

TEST_CASE("published Regular dimensions") {
  CHECK(algorithm_regular(upper_triangular(4, Field::prime(2))).module_dim == 7);
  CHECK(algorithm_regular(free_nilpotent(2, 5)).module_dim == 20);
}
