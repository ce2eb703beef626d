#pragma once

#include <cstddef>
#include <vector>

#include "nilrep/lie_algebra.hpp"
#include "nilrep/representation.hpp"

namespace nilrep {

/// One reduction of a faithful module V.
///
/// S = {v : g.v = 0}, C = Z(g).V, M = S ∩ C and W is the deterministic
/// complement of M in S. W is a submodule meeting C trivially, so V/W stays
/// faithful. `rep` is V/W on the complement basis (equal to the input when
/// W = 0).
struct ReductionStep {
  Subspace annihilated;
  Subspace center_image;
  Subspace removed;
  Representation rep;
};

ReductionStep reduce_once(const Representation& rep);

/// The quotient module V/W for a submodule W, on the images of the greedy
/// complement of W (a set of standard basis vectors).
Representation quotient_module(const Representation& rep, const Subspace& w);

/// Algorithm Quotient: the output of Regular, reduced until the removable
/// part of the annihilated subspace vanishes.
Representation algorithm_quotient(const LieAlgebra& g);

/// Repeats reduce_once until nothing is removed; `dims` receives the module
/// dimension before each step.
Representation reduce_fully(Representation rep, std::vector<std::size_t>* dims = nullptr);

}  // namespace nilrep
