#include "nilrep/affine.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace nilrep {

LieAlgebra leading_quotient(const LieAlgebra& adapted, std::size_t k) {
  if (k > adapted.dim()) throw std::invalid_argument("leading_quotient: k exceeds the dimension");
  LieAlgebra q(adapted.field(), k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      SparseVector v;
      for (const auto& [m, c] : adapted.structure(i, j))
        if (m < k) v.push_back(m, c);
      if (!v.empty()) q.set_bracket(i, j, std::move(v));
    }
  return q;
}

Subspace one_cocycles(const LieAlgebra& q, const std::vector<SparseMatrix>& rho) {
  const std::size_t d = q.dim();
  if (rho.size() != d) throw std::invalid_argument("one_cocycles: one matrix per basis vector required");
  const std::size_t n = d == 0 ? 0 : rho.front().rows();
  if (!is_homomorphism(Representation{q, n, rho, {}}))
    throw std::invalid_argument("one_cocycles: rho is not a representation");
  std::vector<SparseVector> eqs;
  // delta([a_j, a_l]) - rho_j delta(a_l) + rho_l delta(a_j) = 0
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t l = j + 1; l < d; ++l) {
      std::vector<SparseVector> rows(n);
      for (const auto& [m, c] : q.structure(j, l))
        for (std::size_t r = 0; r < n; ++r) rows[r].add(m * n + r, c);
      for (std::size_t t = 0; t < n; ++t) {
        for (const auto& [r, x] : rho[j].column(t)) rows[r].add(l * n + t, -x);
        for (const auto& [r, x] : rho[l].column(t)) rows[r].add(j * n + t, x);
      }
      for (auto& row : rows)
        if (!row.empty()) eqs.push_back(std::move(row));
    }
  return nullspace(q.field(), d * n, eqs);
}

namespace {

Scalar random_scalar(const Field& field, std::mt19937_64& rng, long bound) {
  if (field.characteristic() != 0) {
    std::uniform_int_distribution<long> dist(0, static_cast<long>(field.characteristic()) - 1);
    return Scalar(field, dist(rng));
  }
  std::uniform_int_distribution<long> dist(-bound, bound);
  return Scalar(field, dist(rng));
}

bool strictly_lower(const SparseMatrix& m) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, x] : m.column(c))
      if (r <= c) return false;
  return true;
}

}  // namespace

std::optional<AffineState> extend_step(const AffineState& state, const LieAlgebra& adapted, std::mt19937_64& rng,
                                       const AffineOptions& options) {
  const Field& field = adapted.field();
  const std::size_t s = state.step;
  if (s >= adapted.dim()) throw std::invalid_argument("extend_step: nothing left to adjoin");
  const std::size_t n = s + 1;
  const LieAlgebra q = leading_quotient(adapted, s + 1);

  std::vector<SparseMatrix> rho = state.matrices;
  rho.emplace_back(field, n, n);
  if (s == 0 && rho.front().rows() != 1) throw std::logic_error("extend_step: malformed initial state");

  SparseVector delta;
  if (s == 0) {
    delta = SparseVector::unit(0, Scalar(field, 1));
  } else {
    const Subspace z1 = one_cocycles(q, rho);
    auto evaluates = [&](const SparseVector& v) {
      for (const auto& [idx, x] : v)
        if (idx >= s * n) return true;
      return false;
    };
    std::vector<const SparseVector*> evaluating;
    for (const auto& b : z1.sparse_basis())
      if (evaluates(b)) evaluating.push_back(&b);
    if (evaluating.empty()) return std::nullopt;
    const SparseVector& witness = *evaluating.front();
    if (options.choice == CocycleChoice::SparseBasis) {
      std::uniform_int_distribution<std::size_t> pick(0, evaluating.size() - 1);
      delta = *evaluating[pick(rng)];
      Scalar scale(field, 0);
      while (scale.is_zero()) scale = random_scalar(field, rng, std::max(1L, options.coefficient_bound));
      delta.scale(scale);
    } else {
      for (int tries = 0; tries < 16 && delta.empty(); ++tries) {
        std::bernoulli_distribution mix(options.mix_probability);
        SparseVector candidate = witness;
        for (const auto& b : z1.sparse_basis())
          if (mix(rng)) candidate.axpy(random_scalar(field, rng, options.coefficient_bound), b);
        if (evaluates(candidate)) delta = std::move(candidate);
      }
    }
    if (delta.empty()) delta = witness;
  }

  // psi(a_j) = [[0, 0], [delta(a_j), rho_j]] with the new coordinate first.
  AffineState next;
  next.step = s + 1;
  for (std::size_t j = 0; j <= s; ++j) {
    SparseMatrix m(field, n + 1, n + 1);
    SparseVector first;
    for (const auto& [idx, x] : delta)
      if (idx / n == j) first.push_back(idx % n + 1, x);
    m.set_column(0, std::move(first));
    for (std::size_t t = 0; t < n; ++t) {
      SparseVector col;
      for (const auto& [r, x] : rho[j].column(t)) col.push_back(r + 1, x);
      m.set_column(t + 1, std::move(col));
    }
    next.matrices.push_back(std::move(m));
  }

  if (options.verify_steps) {
    Representation check{q, n + 1, next.matrices, {}};
    if (!is_homomorphism(check)) throw std::logic_error("extend_step: extension is not a homomorphism");
    for (const auto& m : next.matrices)
      if (!strictly_lower(m)) throw std::logic_error("extend_step: extension is not strictly lower triangular");
    if (next.matrices.back().is_zero()) throw std::logic_error("extend_step: new basis vector acts trivially");
  }
  return next;
}

AffineOutcome algorithm_affine(const LieAlgebra& g, const AffineOptions& options) {
  const AdaptedBasis ab = adapted_basis(g);
  const std::size_t d = g.dim();
  AffineOutcome out;
  const auto start = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    if (options.time_limit <= 0) return false;
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return elapsed.count() > options.time_limit;
  };
  for (std::size_t attempt = 0; attempt <= options.retries; ++attempt) {
    ++out.attempts;
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(attempt)};
    std::mt19937_64 rng(seq);
    AffineState state;  // the zero quotient acting on K^1
    bool failed = false;
    while (state.step < d) {
      if (out_of_time()) {
        out.reason = "time-limit";
        out.deepest_step = std::max(out.deepest_step, state.step);
        return out;
      }
      auto next = extend_step(state, ab.algebra, rng, options);
      if (!next) {
        failed = true;
        out.reason = "no-cocycle";
        break;
      }
      state = std::move(*next);
    }
    out.deepest_step = std::max(out.deepest_step, state.step);
    if (failed) continue;
    Representation rep;
    rep.algebra = g;
    rep.module_dim = d + 1;
    rep.matrices = to_original_basis(state.matrices, ab.inverse);
    if (d == 0) rep.module_dim = 1;
    rep.provenance.algorithm = Algorithm::Affine;
    rep.provenance.params["seed"] = std::to_string(options.seed);
    rep.provenance.params["attempt"] = std::to_string(attempt);
    out.rep = std::move(rep);
    out.reason.clear();
    return out;
  }
  return out;
}

}  // namespace nilrep
