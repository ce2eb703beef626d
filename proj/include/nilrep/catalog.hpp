#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "nilrep/lie_algebra.hpp"
#include "nilrep/scalar.hpp"

namespace nilrep {

/// [x, y] = z.
LieAlgebra heisenberg(const Field& field = Field::rationals());

/// The abelian algebra K^n.
LieAlgebra abelian(std::size_t n, const Field& field = Field::rationals());

/// Strictly upper triangular n x n matrices; basis E_ij ordered by (j - i, i).
LieAlgebra upper_triangular(std::size_t n, const Field& field = Field::rationals());
std::size_t upper_triangular_dimension(std::size_t n);

/// Lyndon words over {0, ..., n-1} of length 1..c ordered by (length, lex).
std::vector<std::vector<int>> lyndon_words(std::size_t n, std::size_t c);

/// The free nilpotent algebra of rank n and class c on the Lyndon basis.
LieAlgebra free_nilpotent(std::size_t n, std::size_t c, const Field& field = Field::rationals());

/// sum_{m=1}^{c} (1/m) sum_{e | m} mu(e) n^{m/e}.
std::size_t witt_dimension(std::size_t n, std::size_t c);

/// Whether (k, s) lies in the index set of the filiform family of dimension n.
bool filiform_index(std::size_t n, std::size_t k, std::size_t s);

/// The parameters alpha_{k,s} of f_n (exact rationals, zero outside the index set).
std::map<std::pair<std::size_t, std::size_t>, mpq_class> filiform_alpha(std::size_t n);

/// The filiform algebra f_n over Q, n >= 13.
LieAlgebra filiform(std::size_t n);

/// The bracket formula of the filiform family with arbitrary parameters;
/// alpha_{k,s} missing from the map count as zero. Jacobi is not checked.
LieAlgebra filiform(std::size_t n, const std::map<std::pair<std::size_t, std::size_t>, mpq_class>& alpha);

/// Left and right sides of the three polynomial identities between the
/// alpha parameters of f_n.
struct PfaffIdentity {
  mpq_class lhs;
  mpq_class rhs;
};
std::vector<PfaffIdentity> pfaff_identities(std::size_t n);

/// Parses "heisenberg", "abelian:n", "utri:n", "freenilp:n,c", "filiform:n".
LieAlgebra catalog_algebra(const std::string& spec, const Field& field = Field::rationals());

}  // namespace nilrep
