#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilrep/lie_algebra.hpp"
#include "nilrep/linalg.hpp"

namespace nilrep {

enum class Algorithm { Regular, Quotient, Dual, Affine, Unpruned, External };

std::string to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& name);

struct Provenance {
  Algorithm algorithm = Algorithm::External;
  std::map<std::string, std::string> params;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// A representation of a Lie algebra on K^n given by one matrix per basis
/// vector of the algebra's original basis. Matrices act on column vectors.
struct Representation {
  LieAlgebra algebra;
  std::size_t module_dim = 0;
  std::vector<SparseMatrix> matrices;
  Provenance provenance;

  /// The image of an arbitrary algebra element.
  SparseMatrix image(const Vector& x) const;

  friend bool operator==(const Representation&, const Representation&) = default;
};

/// Re-expresses matrices given on an adapted basis (column k of
/// `change_of_basis` is the k-th adapted vector) on the original basis.
std::vector<SparseMatrix> to_original_basis(const std::vector<SparseMatrix>& adapted, const Matrix& inverse_change);

/// The first basis pair (i, j), i < j, with [M_i, M_j] != sum_k c_ij^k M_k.
std::optional<std::pair<std::size_t, std::size_t>> first_homomorphism_failure(const Representation& rep);
inline bool is_homomorphism(const Representation& rep) { return !first_homomorphism_failure(rep).has_value(); }

/// {x in g : rho(x) = 0}.
Subspace kernel(const Representation& rep);
inline bool is_faithful(const Representation& rep) { return kernel(rep).is_zero(); }

/// {v in V : x.v = 0 for all x}.
Subspace annihilated_subspace(const Representation& rep);

/// The span of z.v over v in V and z in Z(g).
Subspace center_image(const Representation& rep);

/// True if every matrix is nilpotent.
bool has_nilpotent_matrices(const Representation& rep);

/// Conjugates every matrix by an invertible P: M -> P M P^{-1}.
Representation conjugate(const Representation& rep, const Matrix& p);

}  // namespace nilrep
