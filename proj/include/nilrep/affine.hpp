#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nilrep/lie_algebra.hpp"
#include "nilrep/representation.hpp"

namespace nilrep {

/// How the cocycle delta is chosen among those with delta(a_new) != 0.
enum class CocycleChoice {
  /// A uniformly chosen echelon basis cocycle that is nonzero on a_new,
  /// times a random nonzero scalar.
  SparseBasis,
  /// delta_0 plus random multiples of the other basis cocycles.
  Mixed,
};

struct AffineOptions {
  std::uint64_t seed = 1;
  CocycleChoice choice = CocycleChoice::SparseBasis;
  std::size_t retries = 10;
  /// Random coefficients over Q are drawn from [-bound, bound].
  long coefficient_bound = 5;
  /// Mixed choice only: probability that each basis cocycle enters the
  /// random combination.
  double mix_probability = 1.0;
  /// Check the homomorphism property after every extension step.
  bool verify_steps = true;
  /// Wall-clock budget in seconds for all attempts together; 0 means none.
  double time_limit = 0;
};

/// Algebra spanned by the first k vectors of a basis whose tail spans a
/// chain of ideals: brackets are projected onto the first k coordinates.
LieAlgebra leading_quotient(const LieAlgebra& adapted, std::size_t k);

/// Z^1(q, K^n) for the representation rho of q (one n x n matrix per basis
/// vector). Coordinate j * n + r is the r-th component of delta(a_j).
/// Throws std::invalid_argument if rho is not a representation of q.
Subspace one_cocycles(const LieAlgebra& q, const std::vector<SparseMatrix>& rho);

/// State after adjoining the first `step` basis vectors: a faithful
/// representation of the leading quotient of dimension `step` on K^{step+1}.
struct AffineState {
  std::size_t step = 0;
  std::vector<SparseMatrix> matrices;  // one per adjoined basis vector
};

/// Adjoins basis vector `state.step` (0-based). Returns nullopt when every
/// cocycle vanishes on it, which is a deterministic failure for this state.
std::optional<AffineState> extend_step(const AffineState& state, const LieAlgebra& adapted, std::mt19937_64& rng,
                                       const AffineOptions& options);

struct AffineOutcome {
  std::optional<Representation> rep;
  /// Number of basis vectors adjoined in the deepest attempt.
  std::size_t deepest_step = 0;
  std::size_t attempts = 0;
  /// Why the last attempt stopped: "" on success, "no-cocycle" when the
  /// evaluation map vanished, "time-limit" when the budget ran out.
  std::string reason;
};

/// Algorithm Affine, retried with fresh randomness derived from the seed.
AffineOutcome algorithm_affine(const LieAlgebra& g, const AffineOptions& options = {});

}  // namespace nilrep
