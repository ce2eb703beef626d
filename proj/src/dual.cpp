#include "nilrep/dual.hpp"

#include <deque>
#include <stdexcept>

namespace nilrep {

SparseVector dual_action(const TruncatedUEA& u, std::size_t i, const SparseVector& f) {
  // Column k of the action matrix is x_i * (k-th active monomial), so the
  // dual action is f -> -M^T f.
  SparseVector out;
  const auto& active = u.active();
  for (std::size_t k = 0; k < active.size(); ++k) {
    Scalar acc(u.algebra().field(), 0);
    for (const auto& [b, x] : u.product(i, active[k]))
      if (u.is_active(b)) acc = acc + x * f.at(static_cast<std::size_t>(u.position(b)));
    if (!acc.is_zero()) out.push_back(k, -acc);
  }
  return out;
}

namespace {

std::vector<SparseMatrix> transposed_actions(const TruncatedUEA& u) {
  std::vector<SparseMatrix> out;
  for (std::size_t i = 0; i < u.generators(); ++i) out.push_back(u.action_matrix(i).transpose().scaled(Scalar(-1)));
  return out;
}

}  // namespace

std::vector<SparseVector> spin_submodule(const TruncatedUEA& u, const std::vector<SparseVector>& generators) {
  const auto actions = transposed_actions(u);
  EchelonBuilder builder(u.algebra().field(), u.active().size());
  std::deque<SparseVector> work;
  for (const auto& v : generators)
    if (builder.insert(v)) work.push_back(v);
  while (!work.empty()) {
    const SparseVector v = std::move(work.front());
    work.pop_front();
    for (const auto& a : actions) {
      SparseVector w = a.apply(v);
      if (builder.insert(w)) work.push_back(std::move(w));
    }
  }
  return builder.reduced_basis();
}

DualModule dual_module(const LieAlgebra& g) {
  DualModule out{regular_module(g, true), {}, {}};
  const TruncatedUEA& u = out.regular.uea;
  const Field& field = g.field();

  std::vector<SparseVector> gens;
  for (std::size_t m : protected_monomials(u, out.regular.central)) {
    if (u.monomials()[m].is_one()) continue;
    gens.push_back(SparseVector::unit(static_cast<std::size_t>(u.position(m)), Scalar(field, 1)));
  }
  out.functionals = spin_submodule(u, gens);

  const auto actions = transposed_actions(u);
  const std::size_t n = out.functionals.size();
  std::vector<SparseMatrix> adapted(g.dim());
  for (std::size_t gen = 0; gen < actions.size(); ++gen) {
    const SparseMatrix& a = actions[gen];
    SparseMatrix m(field, n, n);
    for (std::size_t k = 0; k < n; ++k) {
      SparseVector y = a.apply(out.functionals[k]);
      SparseVector col;
      SparseVector residue = y;
      for (std::size_t r = 0; r < n && !residue.empty(); ++r) {
        const std::size_t pivot = out.functionals[r].entries().front().first;
        const Scalar c = y.at(pivot);
        if (c.is_zero()) continue;
        col.push_back(r, c);
        residue.axpy(-c, out.functionals[r]);
      }
      if (!residue.empty()) throw std::logic_error("dual_module: spun space is not a submodule");
      m.set_column(k, std::move(col));
    }
    adapted[out.regular.order[gen]] = std::move(m);
  }
  out.rep.algebra = g;
  out.rep.module_dim = n;
  out.rep.matrices = to_original_basis(adapted, out.regular.basis.inverse);
  out.rep.provenance.algorithm = Algorithm::Dual;
  out.rep.provenance.params["pruned"] = std::to_string(u.active().size());
  return out;
}

Representation algorithm_dual(const LieAlgebra& g) { return dual_module(g).rep; }

}  // namespace nilrep
