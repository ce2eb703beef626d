#include "nilrep/representation.hpp"

#include <stdexcept>

namespace nilrep {

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Regular: return "regular";
    case Algorithm::Quotient: return "quotient";
    case Algorithm::Dual: return "dual";
    case Algorithm::Affine: return "affine";
    case Algorithm::Unpruned: return "unpruned";
    case Algorithm::External: return "external";
  }
  return "external";
}

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "regular") return Algorithm::Regular;
  if (name == "quotient") return Algorithm::Quotient;
  if (name == "dual") return Algorithm::Dual;
  if (name == "affine") return Algorithm::Affine;
  if (name == "unpruned") return Algorithm::Unpruned;
  if (name == "external") return Algorithm::External;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

SparseMatrix Representation::image(const Vector& x) const {
  if (x.size() != matrices.size()) throw std::invalid_argument("image: dimension mismatch");
  SparseMatrix out(algebra.field(), module_dim, module_dim);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out.axpy(x[i], matrices[i]);
  return out;
}

std::vector<SparseMatrix> to_original_basis(const std::vector<SparseMatrix>& adapted, const Matrix& inverse_change) {
  // e_j = sum_k inverse(k, j) x_k
  std::vector<SparseMatrix> out;
  if (adapted.empty()) return out;
  const std::size_t d = adapted.size();
  for (std::size_t j = 0; j < d; ++j) {
    SparseMatrix m(adapted.front().field(), adapted.front().rows(), adapted.front().cols());
    for (std::size_t k = 0; k < d; ++k)
      if (!inverse_change(k, j).is_zero()) m.axpy(inverse_change(k, j), adapted[k]);
    out.push_back(std::move(m));
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> first_homomorphism_failure(const Representation& rep) {
  const LieAlgebra& g = rep.algebra;
  if (rep.matrices.size() != g.dim()) throw std::invalid_argument("representation has the wrong number of matrices");
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      SparseMatrix lhs = commutator(rep.matrices[i], rep.matrices[j]);
      for (const auto& [k, c] : g.structure(i, j)) lhs.axpy(-c, rep.matrices[k]);
      if (!lhs.is_zero()) return std::make_pair(i, j);
    }
  return std::nullopt;
}

Subspace kernel(const Representation& rep) {
  const std::size_t d = rep.matrices.size();
  std::map<std::pair<std::size_t, std::size_t>, SparseVector> rows;
  for (std::size_t i = 0; i < d; ++i) {
    const SparseMatrix& m = rep.matrices[i];
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (const auto& [r, x] : m.column(c)) rows[{c, r}].push_back(i, x);
  }
  std::vector<SparseVector> eqs;
  eqs.reserve(rows.size());
  for (auto& [pos, r] : rows) eqs.push_back(std::move(r));
  return nullspace(rep.algebra.field(), d, eqs);
}

Subspace annihilated_subspace(const Representation& rep) {
  // Rows of all M_i, stacked.
  std::vector<SparseVector> eqs;
  for (const auto& m : rep.matrices) {
    SparseMatrix t = m.transpose();
    for (std::size_t r = 0; r < t.cols(); ++r)
      if (!t.column(r).empty()) eqs.push_back(t.column(r));
  }
  return nullspace(rep.algebra.field(), rep.module_dim, eqs);
}

Subspace center_image(const Representation& rep) {
  const Subspace z = center(rep.algebra);
  std::vector<SparseVector> cols;
  for (const auto& v : z.basis()) {
    const SparseMatrix mz = rep.image(v);
    for (std::size_t c = 0; c < mz.cols(); ++c)
      if (!mz.column(c).empty()) cols.push_back(mz.column(c));
  }
  return Subspace::span(rep.algebra.field(), rep.module_dim, cols);
}

bool has_nilpotent_matrices(const Representation& rep) {
  for (const auto& m : rep.matrices) {
    SparseMatrix power = m;
    std::size_t k = 1;
    while (!power.is_zero()) {
      if (k >= rep.module_dim) return false;
      power = power * m;
      ++k;
    }
  }
  return true;
}

Representation conjugate(const Representation& rep, const Matrix& p) {
  const Matrix pinv = inverse(p);
  const SparseMatrix sp = SparseMatrix::from_dense(p);
  const SparseMatrix spinv = SparseMatrix::from_dense(pinv);
  Representation out = rep;
  for (auto& m : out.matrices) m = sp * m * spinv;
  return out;
}

}  // namespace nilrep
