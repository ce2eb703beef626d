#include "nilrep/regular.hpp"

#include <algorithm>
#include <stdexcept>

#include <gmpxx.h>

namespace nilrep {

std::uint64_t partitions(std::size_t j) {
  std::vector<mpz_class> p(j + 1, 0);
  p[0] = 1;
  for (std::size_t part = 1; part <= j; ++part)
    for (std::size_t s = part; s <= j; ++s) p[s] += p[s - part];
  if (!p[j].fits_ulong_p()) throw std::overflow_error("partition count overflows");
  return p[j].get_ui();
}

std::uint64_t nu(std::size_t d, std::size_t c) {
  if (c > d) throw std::invalid_argument("nu: requires c <= d");
  mpz_class total = 0;
  for (std::size_t j = 0; j <= c; ++j) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), d - j, c - j);
    total += b * partitions(j);
  }
  if (!total.fits_ulong_p()) throw std::overflow_error("nu overflows");
  return total.get_ui();
}

std::vector<std::size_t> protected_monomials(const TruncatedUEA& u, const std::vector<bool>& central) {
  const std::size_t d = u.generators();
  std::vector<std::size_t> out;
  Monomial one{std::vector<std::uint8_t>(d, 0), 0};
  out.push_back(*u.index_of(one));
  for (std::size_t i = 0; i < d; ++i) {
    if (!central[i]) continue;
    Monomial z{std::vector<std::uint8_t>(d, 0), u.weights()[i]};
    z.exponents[i] = 1;
    if (auto idx = u.index_of(z)) out.push_back(*idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TruncatedUEA prune(const TruncatedUEA& u, const std::vector<bool>& central,
                   std::vector<std::vector<std::size_t>>* sweeps) {
  if (central.size() != u.generators()) throw std::invalid_argument("prune: one central flag per generator required");
  const std::vector<std::size_t> keep = protected_monomials(u, central);
  std::vector<bool> active(u.monomials().size(), false);
  for (std::size_t m : u.active()) active[m] = true;

  for (;;) {
    std::vector<std::size_t> removed;
    for (auto it = u.monomials().size(); it-- > 0;) {
      if (!active[it] || std::binary_search(keep.begin(), keep.end(), it)) continue;
      bool removable = true;
      for (std::size_t i = 0; i < u.generators() && removable; ++i)
        for (const auto& [b, x] : u.product(i, it))
          if (active[b]) {
            removable = false;
            break;
          }
      if (removable) removed.push_back(it);
    }
    if (removed.empty()) break;
    for (std::size_t m : removed) active[m] = false;
    if (sweeps) sweeps->push_back(removed);
  }
  std::vector<std::size_t> remaining;
  for (std::size_t m = 0; m < active.size(); ++m)
    if (active[m]) remaining.push_back(m);
  return u.with_active(std::move(remaining));
}

std::vector<std::size_t> pbw_order(const std::vector<std::size_t>& weights) {
  std::vector<std::size_t> order(weights.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return weights[a] > weights[b]; });
  return order;
}

RegularModule regular_module(const LieAlgebra& g, bool pruned) {
  RegularModule out{adapted_basis(g), {}, {}, TruncatedUEA(LieAlgebra(g.field(), 0), {}, 0), {}};
  out.order = pbw_order(out.basis.weights);
  std::vector<std::size_t> weights;
  for (std::size_t k : out.order) {
    weights.push_back(out.basis.weights[k]);
    out.central.push_back(out.basis.central[k]);
  }
  out.uea = TruncatedUEA(permute_basis(out.basis.algebra, out.order), weights, out.basis.nilpotency_class);
  if (pruned) out.uea = prune(out.uea, out.central, &out.removed_per_sweep);
  return out;
}

Representation module_representation(const LieAlgebra& g, const RegularModule& module, Algorithm tag) {
  std::vector<SparseMatrix> adapted(g.dim());
  for (std::size_t k = 0; k < g.dim(); ++k) adapted[module.order[k]] = module.uea.action_matrix(k);
  Representation rep;
  rep.algebra = g;
  rep.module_dim = module.uea.active().size();
  rep.matrices = to_original_basis(adapted, module.basis.inverse);
  if (g.dim() == 0) rep.matrices.clear();
  rep.provenance.algorithm = tag;
  rep.provenance.params["monomials"] = std::to_string(module.uea.monomials().size());
  rep.provenance.params["class"] = std::to_string(module.basis.nilpotency_class);
  return rep;
}

Representation regular_unpruned(const LieAlgebra& g) {
  return module_representation(g, regular_module(g, false), Algorithm::Unpruned);
}

Representation algorithm_regular(const LieAlgebra& g) {
  const RegularModule module = regular_module(g, true);
  Representation rep = module_representation(g, module, Algorithm::Regular);
  rep.provenance.params["sweeps"] = std::to_string(module.removed_per_sweep.size());
  return rep;
}

}  // namespace nilrep
