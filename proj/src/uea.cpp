#include "nilrep/uea.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace nilrep {

std::size_t Monomial::degree() const {
  std::size_t n = 0;
  for (auto e : exponents) n += e;
  return n;
}

bool monomial_less(const Monomial& a, const Monomial& b) {
  if (a.weight != b.weight) return a.weight < b.weight;
  return a.exponents < b.exponents;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names.empty() ? "x" + std::to_string(i + 1) : names[i];
    if (m.exponents[i] > 1) out += '^' + std::to_string(m.exponents[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<Monomial> enumerate_monomials(std::span<const std::size_t> weights, long c) {
  if (c < 0) throw std::invalid_argument("enumerate_monomials: negative weight bound");
  if (c > 255) throw std::invalid_argument("enumerate_monomials: weight bound too large");
  for (auto w : weights)
    if (w == 0) throw std::invalid_argument("enumerate_monomials: weights must be positive");
  const std::size_t d = weights.size();
  const auto bound = static_cast<std::size_t>(c);
  std::vector<Monomial> out;
  Monomial cur{std::vector<std::uint8_t>(d, 0), 0};
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == d) {
      out.push_back(cur);
      return;
    }
    const std::size_t saved = cur.weight;
    for (std::uint8_t e = 0;; ++e) {
      cur.exponents[i] = e;
      cur.weight = saved + e * weights[i];
      if (cur.weight > bound) break;
      rec(i + 1);
    }
    cur.exponents[i] = 0;
    cur.weight = saved;
  };
  rec(0);
  std::sort(out.begin(), out.end(), monomial_less);
  return out;
}

std::size_t TruncatedUEA::Table::lookup(const std::vector<std::uint8_t>& exps) const {
  auto it = std::lower_bound(sorted_index.begin(), sorted_index.end(), exps,
                             [](const auto& entry, const auto& key) { return entry.first < key; });
  if (it == sorted_index.end() || it->first != exps) throw std::logic_error("monomial missing from truncation");
  return it->second;
}

std::shared_ptr<const TruncatedUEA::Table> TruncatedUEA::build(const LieAlgebra& algebra, std::vector<std::size_t> weights,
                                                               std::size_t c) {
  const std::size_t d = algebra.dim();
  if (weights.size() != d) throw std::invalid_argument("TruncatedUEA: one weight per generator required");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, x] : algebra.structure(i, j))
        if (weights[k] < weights[i] + weights[j])
          throw std::invalid_argument("TruncatedUEA: basis is not adapted to the lower central series");

  auto table = std::make_shared<Table>();
  table->algebra = algebra;
  table->weights = std::move(weights);
  table->c = c;
  table->monomials = enumerate_monomials(table->weights, static_cast<long>(c));
  const std::size_t n = table->monomials.size();
  for (std::size_t m = 0; m < n; ++m) table->sorted_index.emplace_back(table->monomials[m].exponents, m);
  std::sort(table->sorted_index.begin(), table->sorted_index.end());

  const Field& field = algebra.field();
  auto& products = table->products;
  products.assign(d, std::vector<SparseVector>(n));
  std::vector<std::vector<bool>> done(d, std::vector<bool>(n, false));
  const Table& t = *table;

  std::function<const SparseVector&(std::size_t, std::size_t)> mul = [&](std::size_t i,
                                                                          std::size_t m) -> const SparseVector& {
    if (done[i][m]) return products[i][m];
    const auto& exps = t.monomials[m].exponents;
    std::size_t j = 0;
    while (j < d && exps[j] == 0) ++j;
    SparseVector result;
    if (j == d || i <= j) {
      if (t.monomials[m].weight + t.weights[i] <= c) {
        auto e = exps;
        ++e[i];
        result = SparseVector::unit(t.lookup(e), Scalar(field, 1));
      }
    } else {
      // x_i x_j m' = x_j (x_i m') + [x_i, x_j] m'
      auto e = exps;
      --e[j];
      const std::size_t rest = t.lookup(e);
      const SparseVector inner = mul(i, rest);
      for (const auto& [b, coeff] : inner) result.axpy(coeff, mul(j, b));
      for (const auto& [k, coeff] : t.algebra.structure(i, j)) result.axpy(coeff, mul(k, rest));
    }
    products[i][m] = std::move(result);
    done[i][m] = true;
    return products[i][m];
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t m = 0; m < n; ++m) mul(i, m);
  return table;
}

TruncatedUEA::TruncatedUEA(const LieAlgebra& algebra, std::vector<std::size_t> weights, std::size_t c)
    : table_(build(algebra, std::move(weights), c)) {
  std::vector<std::size_t> all(table_->monomials.size());
  for (std::size_t m = 0; m < all.size(); ++m) all[m] = m;
  *this = TruncatedUEA(table_, std::move(all));
}

TruncatedUEA::TruncatedUEA(std::shared_ptr<const Table> table, std::vector<std::size_t> active)
    : table_(std::move(table)), active_(std::move(active)), position_(table_->monomials.size(), -1) {
  std::sort(active_.begin(), active_.end());
  active_.erase(std::unique(active_.begin(), active_.end()), active_.end());
  for (std::size_t k = 0; k < active_.size(); ++k) {
    if (active_[k] >= position_.size()) throw std::out_of_range("active monomial index out of range");
    position_[active_[k]] = static_cast<long>(k);
  }
}

TruncatedUEA TruncatedUEA::for_algebra(const LieAlgebra& g) {
  const AdaptedBasis ab = adapted_basis(g);
  return TruncatedUEA(ab.algebra, ab.weights, ab.nilpotency_class);
}

std::optional<std::size_t> TruncatedUEA::index_of(const Monomial& m) const {
  auto it = std::lower_bound(table_->sorted_index.begin(), table_->sorted_index.end(), m.exponents,
                             [](const auto& entry, const auto& key) { return entry.first < key; });
  if (it == table_->sorted_index.end() || it->first != m.exponents) return std::nullopt;
  return it->second;
}

TruncatedUEA TruncatedUEA::with_active(std::vector<std::size_t> active) const {
  return TruncatedUEA(table_, std::move(active));
}

const SparseVector& TruncatedUEA::product(std::size_t i, std::size_t m) const {
  if (i >= generators()) throw std::out_of_range("generator index out of range");
  return table_->products[i].at(m);
}

SparseVector TruncatedUEA::left_multiply(std::size_t i, std::size_t m) const {
  SparseVector out;
  for (const auto& [b, x] : product(i, m))
    if (is_active(b)) out.push_back(b, x);
  return out;
}

SparseVector TruncatedUEA::left_multiply(std::size_t i, const Monomial& m) const {
  auto idx = index_of(m);
  if (!idx) throw std::invalid_argument("left_multiply: monomial is outside the truncation");
  if (!is_active(*idx)) throw std::invalid_argument("left_multiply: monomial is not active");
  return left_multiply(i, *idx);
}

SparseMatrix TruncatedUEA::action_matrix(std::size_t i) const {
  const std::size_t n = active_.size();
  SparseMatrix mat(algebra().field(), n, n);
  for (std::size_t k = 0; k < n; ++k) {
    SparseVector col;
    for (const auto& [b, x] : product(i, active_[k]))
      if (position_[b] >= 0) col.push_back(static_cast<std::size_t>(position_[b]), x);
    mat.set_column(k, std::move(col));
  }
  return mat;
}

}  // namespace nilrep
