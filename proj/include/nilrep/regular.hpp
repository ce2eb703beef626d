#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nilrep/lie_algebra.hpp"
#include "nilrep/representation.hpp"
#include "nilrep/uea.hpp"

namespace nilrep {

/// Number of partitions of j, p(0) = 1.
std::uint64_t partitions(std::size_t j);

/// nu(d, c) = sum_{j=0}^{c} binom(d - j, c - j) p(j).
std::uint64_t nu(std::size_t d, std::size_t c);

/// Generator order for PBW monomials: the weight layers of an adapted basis
/// from the highest weight down, each layer in its adapted order. Returns
/// perm with generator k = adapted basis vector perm[k].
std::vector<std::size_t> pbw_order(const std::vector<std::size_t>& weights);

/// Module structure of U(g)/U^{c+1}(g) on the PBW monomials of an adapted
/// basis taken in pbw_order.
struct RegularModule {
  AdaptedBasis basis;
  std::vector<std::size_t> order;  // generator k of `uea` = adapted vector order[k]
  std::vector<bool> central;       // central flags in generator order
  TruncatedUEA uea;
  /// Monomials removed in each pruning sweep (indices into uea.monomials()).
  std::vector<std::vector<std::size_t>> removed_per_sweep;
};

/// Indices of 1 and of the degree-one monomials of central basis vectors;
/// pruning never removes these.
std::vector<std::size_t> protected_monomials(const TruncatedUEA& u, const std::vector<bool>& central);

/// Greedy monomial pruning.
///
/// A non-protected active monomial a is removed when x_i * a only involves
/// removed monomials (or weight > c) for every generator x_i. Each sweep
/// decides removals against the active set at the start of the sweep,
/// scanning by descending weight; sweeps repeat until one removes nothing.
/// Returns the pruned algebra; `sweeps` receives the removals per sweep.
TruncatedUEA prune(const TruncatedUEA& u, const std::vector<bool>& central,
                   std::vector<std::vector<std::size_t>>* sweeps = nullptr);

/// Adapted basis plus the unpruned truncated enveloping algebra.
RegularModule regular_module(const LieAlgebra& g, bool pruned);

/// Builds the representation on span(active monomials) of a module, in the
/// original basis of g.
Representation module_representation(const LieAlgebra& g, const RegularModule& module, Algorithm tag);

/// The faithful module U(g)/U^{c+1}(g) without pruning.
Representation regular_unpruned(const LieAlgebra& g);

/// Algorithm Regular: the truncated module followed by monomial pruning.
Representation algorithm_regular(const LieAlgebra& g);

}  // namespace nilrep
