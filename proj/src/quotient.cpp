#include "nilrep/quotient.hpp"

#include <stdexcept>

#include "nilrep/regular.hpp"

namespace nilrep {

Representation quotient_module(const Representation& rep, const Subspace& w) {
  const Field& field = rep.algebra.field();
  const std::size_t n = rep.module_dim;
  if (w.is_zero()) return rep;
  const Subspace u = complement_in(w, Subspace::full(field, n));

  // The greedy complement of a subspace inside the full space consists of
  // unit vectors e_k, k in `keep`; W's coordinates are then read off at the
  // remaining positions `other`.
  std::vector<long> position(n, -1);
  std::vector<std::size_t> keep;
  for (const auto& v : u.sparse_basis()) {
    if (v.nnz() != 1 || !v.entries().front().second.is_one())
      throw std::logic_error("quotient_module: complement is not spanned by unit vectors");
    keep.push_back(v.entries().front().first);
  }
  std::vector<bool> kept(n, false);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    kept[keep[k]] = true;
    position[keep[k]] = static_cast<long>(k);
  }
  std::vector<std::size_t> other;
  for (std::size_t k = 0; k < n; ++k)
    if (!kept[k]) other.push_back(k);

  const auto& wb = w.sparse_basis();
  const std::size_t r = wb.size();
  Matrix wq(field, r, r);  // wq(a, b) = w_b[other[a]]
  std::vector<long> other_pos(n, -1);
  for (std::size_t a = 0; a < r; ++a) other_pos[other[a]] = static_cast<long>(a);
  for (std::size_t b = 0; b < r; ++b)
    for (const auto& [idx, x] : wb[b])
      if (other_pos[idx] >= 0) wq(static_cast<std::size_t>(other_pos[idx]), b) = x;
  const SparseMatrix wq_inv = SparseMatrix::from_dense(inverse(wq));

  Representation out = rep;
  out.module_dim = keep.size();
  for (auto& m : out.matrices) {
    SparseMatrix reduced(field, keep.size(), keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) {
      SparseVector y = m.column(keep[k]);
      SparseVector yq;
      for (const auto& [idx, x] : y)
        if (other_pos[idx] >= 0) yq.add(static_cast<std::size_t>(other_pos[idx]), x);
      const SparseVector alpha = wq_inv.apply(yq);
      for (const auto& [b, x] : alpha) y.axpy(-x, wb[b]);
      SparseVector col;
      for (const auto& [idx, x] : y) {
        if (position[idx] < 0) throw std::logic_error("quotient_module: W is not a submodule");
        col.push_back(static_cast<std::size_t>(position[idx]), x);
      }
      reduced.set_column(k, std::move(col));
    }
    m = std::move(reduced);
  }
  return out;
}

ReductionStep reduce_once(const Representation& rep) {
  ReductionStep step;
  step.annihilated = annihilated_subspace(rep);
  step.center_image = center_image(rep);
  const Subspace m = intersect(step.annihilated, step.center_image);
  step.removed = complement_in(m, step.annihilated);
  step.rep = quotient_module(rep, step.removed);
  return step;
}

Representation reduce_fully(Representation rep, std::vector<std::size_t>* dims) {
  for (;;) {
    if (dims) dims->push_back(rep.module_dim);
    ReductionStep step = reduce_once(rep);
    if (step.removed.is_zero()) return rep;
    rep = std::move(step.rep);
  }
}

Representation algorithm_quotient(const LieAlgebra& g) {
  std::vector<std::size_t> dims;
  Representation rep = reduce_fully(algorithm_regular(g), &dims);
  rep.provenance.algorithm = Algorithm::Quotient;
  rep.provenance.params["reductions"] = std::to_string(dims.size() - 1);
  return rep;
}

}  // namespace nilrep
