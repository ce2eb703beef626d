#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilrep/linalg.hpp"

namespace nilrep {

class NotNilpotent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite-dimensional Lie algebra given by structure constants
/// [x_i, x_j] = sum_k c_ij^k x_k on a fixed ordered basis.
///
/// Only the brackets with i < j are set by callers; antisymmetry is
/// implicit. The Jacobi identity is not assumed and can be checked with
/// check_jacobi().
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// The abelian algebra of the given dimension.
  LieAlgebra(const Field& field, std::size_t dim);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }

  /// Sets [x_i, x_j]; for i > j the negated value is stored for (j, i).
  void set_bracket(std::size_t i, std::size_t j, const SparseVector& value);
  /// [x_i, x_j] in coordinates.
  const SparseVector& structure(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  bool is_abelian() const;

  /// Optional human-readable names of the basis vectors.
  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> names);

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  Field field_;
  std::size_t dim_ = 0;
  std::vector<SparseVector> table_;  // full d x d table, kept antisymmetric
  std::vector<std::string> names_;
};

/// Bilinear extension of the structure constants.
Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y);
SparseVector bracket(const LieAlgebra& g, const SparseVector& x, const SparseVector& y);

/// Basis triples i < j < k (0-based) at which the Jacobi identity fails.
std::vector<std::array<std::size_t, 3>> check_jacobi(const LieAlgebra& g);

/// ad(x) as a d x d matrix: column j holds [x, x_j].
Matrix adjoint(const LieAlgebra& g, const Vector& x);

/// [a, b] for subspaces a, b of g.
Subspace bracket_space(const LieAlgebra& g, const Subspace& a, const Subspace& b);

bool is_ideal(const LieAlgebra& g, const Subspace& s);

/// Terms g^1 = g, g^2 = [g, g], ..., ending with the first zero term.
/// Throws NotNilpotent if the series stabilises at a nonzero subspace.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);

/// Nilpotency class: the largest m with g^m != 0 (0 for the zero algebra).
std::size_t nilpotency_class(const LieAlgebra& g);

Subspace center(const LieAlgebra& g);

/// A basis through the lower central series and the center.
///
/// For every m the vectors of weight >= m span g^m, and the vectors flagged
/// central span Z(g). Weights are non-decreasing along the basis.
struct AdaptedBasis {
  Matrix change_of_basis;  // column k = k-th new basis vector in old coordinates
  Matrix inverse;          // old coordinates -> new coordinates
  std::vector<std::size_t> weights;
  std::vector<bool> central;
  LieAlgebra algebra;  // the input algebra rewritten in the new basis
  std::size_t nilpotency_class = 0;
};

/// The same algebra on the reordered basis y_k = x_{perm[k]}.
LieAlgebra permute_basis(const LieAlgebra& g, const std::vector<std::size_t>& perm);

/// Builds the layers top-down: inside layer m the central part
/// (Z ∩ g^m + g^{m+1}) / g^{m+1} is filled first, then g^m / g^{m+1}, each
/// from echelon basis vectors in order. Throws NotNilpotent.
AdaptedBasis adapted_basis(const LieAlgebra& g);

/// g = g_0 > g_1 > ... > g_d = 0 with one-dimensional steps and
/// [g, g_i] ⊆ g_{i+1}; g_i is spanned by the basis vectors after position i.
struct CentralSeries {
  std::vector<Subspace> chain;  // d + 1 terms
  std::vector<Vector> basis;    // a_1, ..., a_d in original coordinates
};

/// Refines the lower central series using the adapted basis order.
CentralSeries refined_central_series(const LieAlgebra& g);

struct QuotientAlgebra {
  LieAlgebra algebra;
  Matrix projection;                // (d - dim I) x d
  std::vector<Vector> lifts;        // chosen preimages of the quotient basis
};

/// g / ideal, on the basis given by the deterministic complement of the
/// ideal. Throws std::invalid_argument if `ideal` is not an ideal.
QuotientAlgebra quotient(const LieAlgebra& g, const Subspace& ideal);

/// dim H^2(g, K) with trivial coefficients.
std::size_t betti2(const LieAlgebra& g);

/// g ⊕ K^k with the extra summand central.
LieAlgebra direct_sum_abelian(const LieAlgebra& g, std::size_t k);

}  // namespace nilrep
