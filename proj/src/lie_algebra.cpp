#include "nilrep/lie_algebra.hpp"

#include <map>
#include <stdexcept>

namespace nilrep {

LieAlgebra::LieAlgebra(const Field& field, std::size_t dim) : field_(field), dim_(dim), table_(dim * dim) {}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const SparseVector& value) {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("set_bracket: basis index out of range");
  if (i == j) {
    if (!value.empty()) throw std::invalid_argument("set_bracket: [x_i, x_i] must vanish");
    return;
  }
  SparseVector v;
  for (const auto& [k, x] : value) {
    if (k >= dim_) throw std::out_of_range("set_bracket: coordinate index out of range");
    v.push_back(k, x.in(field_));
  }
  SparseVector neg = v;
  neg.scale(Scalar(field_, -1));
  table_[i * dim_ + j] = std::move(v);
  table_[j * dim_ + i] = std::move(neg);
}

bool LieAlgebra::is_abelian() const {
  for (const auto& v : table_)
    if (!v.empty()) return false;
  return true;
}

void LieAlgebra::set_names(std::vector<std::string> names) {
  if (!names.empty() && names.size() != dim_) throw std::invalid_argument("set_names: wrong number of names");
  names_ = std::move(names);
}

Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y) {
  if (x.size() != g.dim() || y.size() != g.dim()) throw std::invalid_argument("bracket: dimension mismatch");
  return bracket(g, SparseVector::from_dense(x), SparseVector::from_dense(y)).to_dense(g.field(), g.dim());
}

SparseVector bracket(const LieAlgebra& g, const SparseVector& x, const SparseVector& y) {
  SparseVector out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      if (i >= g.dim() || j >= g.dim()) throw std::invalid_argument("bracket: dimension mismatch");
      if (i != j) out.axpy(a * b, g.structure(i, j));
    }
  return out;
}

std::vector<std::array<std::size_t, 3>> check_jacobi(const LieAlgebra& g) {
  std::vector<std::array<std::size_t, 3>> bad;
  const std::size_t d = g.dim();
  auto basis = [](std::size_t i) { return SparseVector::unit(i); };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        SparseVector sum = bracket(g, g.structure(i, j), basis(k));
        sum.axpy(Scalar(1), bracket(g, g.structure(j, k), basis(i)));
        sum.axpy(Scalar(1), bracket(g, g.structure(k, i), basis(j)));
        if (!sum.empty()) bad.push_back({i, j, k});
      }
  return bad;
}

Matrix adjoint(const LieAlgebra& g, const Vector& x) {
  Matrix ad(g.field(), g.dim(), g.dim());
  const SparseVector sx = SparseVector::from_dense(x);
  for (std::size_t j = 0; j < g.dim(); ++j)
    for (const auto& [k, v] : bracket(g, sx, SparseVector::unit(j))) ad(k, j) = v;
  return ad;
}

Subspace bracket_space(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<SparseVector> gens;
  for (const auto& u : a.sparse_basis())
    for (const auto& w : b.sparse_basis()) gens.push_back(bracket(g, u, w));
  return Subspace::span(g.field(), g.dim(), gens);
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient_dim() != g.dim()) throw std::invalid_argument("is_ideal: dimension mismatch");
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (const auto& v : s.sparse_basis())
      if (!s.contains(bracket(g, SparseVector::unit(i), v))) return false;
  return true;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  std::vector<Subspace> series{Subspace::full(g.field(), g.dim())};
  const Subspace whole = series.front();
  while (!series.back().is_zero()) {
    Subspace next = bracket_space(g, whole, series.back());
    if (next.dim() == series.back().dim())
      throw NotNilpotent("lower central series stabilises at dimension " + std::to_string(next.dim()));
    series.push_back(std::move(next));
  }
  return series;
}

std::size_t nilpotency_class(const LieAlgebra& g) { return lower_central_series(g).size() - 1; }

Subspace center(const LieAlgebra& g) {
  // z is central iff sum_i z_i c_ij^k = 0 for all j, k.
  const std::size_t d = g.dim();
  std::map<std::pair<std::size_t, std::size_t>, SparseVector> rows;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, c] : g.structure(i, j)) rows[{j, k}].push_back(i, c);
  std::vector<SparseVector> eqs;
  eqs.reserve(rows.size());
  for (auto& [key, r] : rows) eqs.push_back(std::move(r));
  return nullspace(g.field(), d, eqs);
}

namespace {

LieAlgebra rewrite(const LieAlgebra& g, const Matrix& basis_cols, const Matrix& inverse_change) {
  const std::size_t d = g.dim();
  LieAlgebra out(g.field(), d);
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < d; ++k) cols.push_back(basis_cols.column(k));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      Vector br = bracket(g, cols[a], cols[b]);
      out.set_bracket(a, b, SparseVector::from_dense(inverse_change * br));
    }
  return out;
}

}  // namespace

AdaptedBasis adapted_basis(const LieAlgebra& g) {
  const std::size_t d = g.dim();
  const std::vector<Subspace> series = lower_central_series(g);
  const std::size_t c = series.size() - 1;
  const Subspace z = center(g);

  std::vector<std::vector<SparseVector>> layers(c + 1);
  std::vector<std::vector<bool>> layer_central(c + 1);
  for (std::size_t m = c; m >= 1; --m) {
    EchelonBuilder builder(g.field(), d);
    for (const auto& r : series[m].sparse_basis()) builder.insert(r);
    const Subspace zm = intersect(z, series[m - 1]);
    auto consider = [&](const SparseVector& v) {
      if (builder.insert(v)) {
        layers[m].push_back(v);
        layer_central[m].push_back(z.contains(v));
      }
    };
    for (const auto& v : zm.sparse_basis()) consider(v);
    for (const auto& v : series[m - 1].sparse_basis()) consider(v);
  }

  AdaptedBasis out;
  out.nilpotency_class = c;
  out.change_of_basis = Matrix(g.field(), d, d);
  std::size_t col = 0;
  for (std::size_t m = 1; m <= c; ++m)
    for (std::size_t k = 0; k < layers[m].size(); ++k, ++col) {
      for (const auto& [i, x] : layers[m][k]) out.change_of_basis(i, col) = x;
      out.weights.push_back(m);
      out.central.push_back(layer_central[m][k]);
    }
  if (col != d) throw std::logic_error("adapted_basis: layers do not fill the algebra");
  out.inverse = inverse(out.change_of_basis);
  out.algebra = rewrite(g, out.change_of_basis, out.inverse);
  return out;
}

CentralSeries refined_central_series(const LieAlgebra& g) {
  const AdaptedBasis ab = adapted_basis(g);
  const std::size_t d = g.dim();
  CentralSeries out;
  for (std::size_t k = 0; k < d; ++k) out.basis.push_back(ab.change_of_basis.column(k));
  for (std::size_t i = 0; i <= d; ++i)
    out.chain.push_back(Subspace::span(g.field(), d, std::vector<Vector>(out.basis.begin() + static_cast<std::ptrdiff_t>(i), out.basis.end())));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t x = 0; x < d; ++x)
      if (!out.chain[i + 1].contains(bracket(g, unit_vector(g.field(), d, x), out.basis[i])))
        throw std::logic_error("refined_central_series: central condition violated");
  return out;
}

QuotientAlgebra quotient(const LieAlgebra& g, const Subspace& ideal) {
  const std::size_t d = g.dim();
  if (ideal.ambient_dim() != d) throw std::invalid_argument("quotient: dimension mismatch");
  if (!is_ideal(g, ideal)) throw std::invalid_argument("quotient: subspace is not an ideal");
  const Subspace comp = complement_in(ideal, Subspace::full(g.field(), d));
  const std::size_t q = comp.dim();

  // Columns: quotient lifts first, then the ideal basis.
  Matrix basis(g.field(), d, d);
  std::size_t col = 0;
  QuotientAlgebra out;
  for (const auto& v : comp.sparse_basis()) {
    out.lifts.push_back(v.to_dense(g.field(), d));
    for (const auto& [i, x] : v) basis(i, col) = x;
    ++col;
  }
  for (const auto& v : ideal.sparse_basis()) {
    for (const auto& [i, x] : v) basis(i, col) = x;
    ++col;
  }
  const Matrix coords = inverse(basis);
  out.projection = Matrix(g.field(), q, d);
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t c = 0; c < d; ++c) out.projection(r, c) = coords(r, c);

  out.algebra = LieAlgebra(g.field(), q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b)
      out.algebra.set_bracket(a, b, SparseVector::from_dense(out.projection * bracket(g, out.lifts[a], out.lifts[b])));
  return out;
}

std::size_t betti2(const LieAlgebra& g) {
  const std::size_t d = g.dim();
  if (d < 2) return 0;
  std::vector<std::size_t> index(d * d, 0);
  std::size_t n = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) index[i * d + j] = n++;

  // Adds coeff * omega(l, k) to the equation row.
  auto add = [&](std::map<std::size_t, Scalar>& row, std::size_t l, std::size_t k, const Scalar& coeff) {
    if (l == k) return;
    if (l < k)
      row[index[l * d + k]] += coeff;
    else
      row[index[k * d + l]] -= coeff;
  };

  std::vector<SparseVector> eqs;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        std::map<std::size_t, Scalar> row;
        for (const auto& [l, c] : g.structure(i, j)) add(row, l, k, c);
        for (const auto& [l, c] : g.structure(j, k)) add(row, l, i, c);
        for (const auto& [l, c] : g.structure(k, i)) add(row, l, j, c);
        SparseVector v;
        for (auto& [col, x] : row) v.push_back(col, x);
        if (!v.empty()) eqs.push_back(std::move(v));
      }
  const std::size_t z2 = nullspace(g.field(), n, eqs).dim();
  // B^2 is the image of phi -> -phi([., .]); its dimension is dim [g, g].
  const Subspace whole = Subspace::full(g.field(), d);
  const std::size_t b2 = bracket_space(g, whole, whole).dim();
  return z2 - b2;
}

LieAlgebra direct_sum_abelian(const LieAlgebra& g, std::size_t k) {
  LieAlgebra out(g.field(), g.dim() + k);
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) out.set_bracket(i, j, g.structure(i, j));
  return out;
}

LieAlgebra permute_basis(const LieAlgebra& g, const std::vector<std::size_t>& perm) {
  const std::size_t d = g.dim();
  if (perm.size() != d) throw std::invalid_argument("permute_basis: permutation has the wrong length");
  std::vector<std::size_t> inv(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    if (perm[k] >= d || inv[perm[k]] != d) throw std::invalid_argument("permute_basis: not a permutation");
    inv[perm[k]] = k;
  }
  LieAlgebra h(g.field(), d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      SparseVector v;
      for (const auto& [k, c] : g.structure(perm[a], perm[b])) v.add(inv[k], c);
      if (!v.empty()) h.set_bracket(a, b, v);
    }
  if (!g.names().empty()) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < d; ++k) names.push_back(g.names()[perm[k]]);
    h.set_names(std::move(names));
  }
  return h;
}

}  // namespace nilrep
