#pragma once

#include <cstddef>
#include <vector>

#include "nilrep/lie_algebra.hpp"
#include "nilrep/regular.hpp"
#include "nilrep/representation.hpp"
#include "nilrep/uea.hpp"

namespace nilrep {

/// (x_i . f)(a) = -f(x_i a) for a functional f on span(active monomials),
/// given by its values at the active positions.
SparseVector dual_action(const TruncatedUEA& u, std::size_t i, const SparseVector& f);

/// The submodule of the dual generated by `generators`, as RREF rows.
std::vector<SparseVector> spin_submodule(const TruncatedUEA& u, const std::vector<SparseVector>& generators);

struct DualModule {
  RegularModule regular;                // the pruned module whose dual is taken
  std::vector<SparseVector> functionals;  // basis of the spun submodule (RREF)
  Representation rep;
};

/// Algorithm Dual with all intermediate data: the submodule of the dual of
/// the pruned module generated by the functionals dual to the central
/// degree-one monomials.
DualModule dual_module(const LieAlgebra& g);

Representation algorithm_dual(const LieAlgebra& g);

}  // namespace nilrep
