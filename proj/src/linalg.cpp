#include "nilrep/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nilrep {

namespace {

void check_member(const Field& field, const Scalar& s) {
  if (!s.is_neutral() && s.characteristic() != field.characteristic())
    throw FieldMismatch("entry from characteristic " + std::to_string(s.characteristic()) +
                        " in a matrix over " + field.to_string());
}

}  // namespace

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, Scalar(field, 0)); }

Vector unit_vector(const Field& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = Scalar(field, 1);
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

// ---------------------------------------------------------------- SparseVector

SparseVector SparseVector::from_dense(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.entries_.emplace_back(i, v[i]);
  return s;
}

SparseVector SparseVector::unit(std::size_t i, const Scalar& value) {
  SparseVector s;
  if (!value.is_zero()) s.entries_.emplace_back(i, value);
  return s;
}

Vector SparseVector::to_dense(const Field& field, std::size_t n) const {
  Vector v = zero_vector(field, n);
  for (const auto& [i, x] : entries_) {
    if (i >= n) throw std::out_of_range("sparse index exceeds dimension");
    v[i] = x.in(field);
  }
  return v;
}

Scalar SparseVector::at(std::size_t i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, std::size_t k) { return e.first < k; });
  if (it != entries_.end() && it->first == i) return it->second;
  return Scalar(0);
}

void SparseVector::push_back(std::size_t i, Scalar value) {
  if (!entries_.empty() && entries_.back().first >= i) throw std::logic_error("SparseVector::push_back out of order");
  if (!value.is_zero()) entries_.emplace_back(i, std::move(value));
}

void SparseVector::add(std::size_t i, const Scalar& value) {
  if (value.is_zero()) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, std::size_t k) { return e.first < k; });
  if (it != entries_.end() && it->first == i) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  } else {
    entries_.insert(it, Entry(i, value));
  }
}

void SparseVector::axpy(const Scalar& factor, const SparseVector& other) {
  if (factor.is_zero() || other.entries_.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Scalar s = a->second + factor * b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

void SparseVector::scale(const Scalar& factor) {
  if (factor.is_zero()) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= factor;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar(field, 0)) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(field, 1);
  return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

bool Matrix::is_zero() const { return nilrep::is_zero(data_); }

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  if (!(field_ == rhs.field_)) throw FieldMismatch("matrix product over different fields");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c)
        if (!rhs(k, c).is_zero()) out(r, c) += a * rhs(k, c);
    }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------- SparseMatrix

SparseMatrix::SparseMatrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), columns_(cols) {}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.field(), m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    SparseVector col;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) col.push_back(r, m(r, c));
    s.columns_[c] = std::move(col);
  }
  return s;
}

void SparseMatrix::set_column(std::size_t c, SparseVector col) {
  if (!col.empty() && col.entries().back().first >= rows_) throw std::out_of_range("column entry beyond row count");
  columns_.at(c) = std::move(col);
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseMatrix::set");
  SparseVector& col = columns_[c];
  Scalar delta = value - col.at(r);
  col.add(r, delta);
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.nnz();
  return n;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const SparseVector& c) { return c.empty(); });
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(field_, rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& [r, x] : columns_[c]) m(r, c) = x;
  return m;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(field_, cols_, rows_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& [r, x] : columns_[c]) t.columns_[r].push_back(c, x);
  return t;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  SparseVector out;
  for (const auto& [c, x] : v) out.axpy(x, columns_.at(c));
  return out;
}

Vector SparseMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (const auto& [r, x] : columns_[c]) out[r] += x * v[c];
  }
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  SparseMatrix out(field_, rows_, rhs.cols_);
  for (std::size_t c = 0; c < rhs.cols_; ++c) out.columns_[c] = apply(rhs.columns_[c]);
  return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& rhs) const {
  SparseMatrix out = *this;
  out.axpy(Scalar(1), rhs);
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& rhs) const {
  SparseMatrix out = *this;
  out.axpy(Scalar(-1), rhs);
  return out;
}

SparseMatrix SparseMatrix::scaled(const Scalar& s) const {
  SparseMatrix out = *this;
  for (auto& c : out.columns_) c.scale(s);
  return out;
}

void SparseMatrix::axpy(const Scalar& factor, const SparseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  for (std::size_t c = 0; c < cols_; ++c) columns_[c].axpy(factor, other.columns_[c]);
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

// ---------------------------------------------------------------- EchelonBuilder

EchelonBuilder::EchelonBuilder(const Field& field, std::size_t ambient)
    : field_(field), ambient_(ambient), pivot_row_(ambient, -1) {}

SparseVector EchelonBuilder::sift(SparseVector v) const {
  std::size_t pos = 0;
  while (pos < v.nnz()) {
    const auto& [col, value] = v.entries()[pos];
    const long r = pivot_row_[col];
    if (r < 0) {
      ++pos;
      continue;
    }
    // Pivot rows only carry entries at or beyond their pivot, so entries
    // before `pos` stay untouched.
    v.axpy(-value, rows_[static_cast<std::size_t>(r)]);
  }
  return v;
}

bool EchelonBuilder::insert(SparseVector v) {
  for (const auto& [i, x] : v) {
    if (i >= ambient_) throw std::out_of_range("vector exceeds ambient dimension");
    check_member(field_, x);
  }
  v = sift(std::move(v));
  if (v.empty()) return false;
  const std::size_t lead = v.entries().front().first;
  v.scale(v.entries().front().second.in(field_).inverse());
  pivot_row_[lead] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

std::vector<SparseVector> EchelonBuilder::reduced_basis() const {
  std::vector<SparseVector> rows = rows_;
  std::sort(rows.begin(), rows.end(), [](const SparseVector& a, const SparseVector& b) {
    return a.entries().front().first < b.entries().front().first;
  });
  std::vector<long> where(ambient_, -1);
  for (std::size_t i = 0; i < rows.size(); ++i) where[rows[i].entries().front().first] = static_cast<long>(i);
  for (std::size_t k = rows.size(); k-- > 0;) {
    std::vector<std::pair<std::size_t, Scalar>> hits;
    bool first = true;
    for (const auto& [col, value] : rows[k]) {
      if (first) {
        first = false;
        continue;
      }
      if (where[col] >= 0) hits.emplace_back(static_cast<std::size_t>(where[col]), value);
    }
    for (const auto& [j, value] : hits) rows[k].axpy(-value, rows[j]);
  }
  for (auto& r : rows) {
    SparseVector fixed;
    for (const auto& [i, x] : r) fixed.push_back(i, x.in(field_));
    r = std::move(fixed);
  }
  return rows;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(const Field& field, std::size_t ambient, std::vector<SparseVector> rref_rows)
    : field_(field), ambient_(ambient), basis_(std::move(rref_rows)) {
  pivots_.reserve(basis_.size());
  for (const auto& r : basis_) pivots_.push_back(r.entries().front().first);
}

Subspace Subspace::zero(const Field& field, std::size_t ambient) { return Subspace(field, ambient, {}); }

Subspace Subspace::full(const Field& field, std::size_t ambient) {
  std::vector<SparseVector> rows;
  for (std::size_t i = 0; i < ambient; ++i) rows.push_back(SparseVector::unit(i, Scalar(field, 1)));
  return Subspace(field, ambient, std::move(rows));
}

Subspace Subspace::span(const Field& field, std::size_t ambient, const std::vector<Vector>& vectors) {
  EchelonBuilder b(field, ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw std::invalid_argument("vector length does not match ambient dimension");
    b.insert(SparseVector::from_dense(v));
  }
  return Subspace(field, ambient, b.reduced_basis());
}

Subspace Subspace::span(const Field& field, std::size_t ambient, const std::vector<SparseVector>& vectors) {
  EchelonBuilder b(field, ambient);
  for (const auto& v : vectors) b.insert(v);
  return Subspace(field, ambient, b.reduced_basis());
}

std::vector<Vector> Subspace::basis() const {
  std::vector<Vector> out;
  out.reserve(basis_.size());
  for (const auto& r : basis_) out.push_back(r.to_dense(field_, ambient_));
  return out;
}

SparseVector Subspace::residue(SparseVector v) const {
  std::size_t pos = 0;
  while (pos < v.nnz()) {
    const std::size_t col = v.entries()[pos].first;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), col);
    if (it == pivots_.end() || *it != col) {
      ++pos;
      continue;
    }
    const Scalar value = v.entries()[pos].second;
    v.axpy(-value, basis_[static_cast<std::size_t>(it - pivots_.begin())]);
  }
  return v;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector length does not match ambient dimension");
  return residue(SparseVector::from_dense(v)).empty();
}

bool Subspace::contains(const SparseVector& v) const { return residue(v).empty(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const SparseVector& r) { return contains(r); });
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector coords;
  coords.reserve(basis_.size());
  for (std::size_t p : pivots_) coords.push_back(v[p].in(field_));
  return coords;
}

// ---------------------------------------------------------------- free functions

RrefResult rref(const Matrix& m) {
  const Field& field = m.field();
  Matrix e(field, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      check_member(field, m(r, c));
      e(r, c) = m(r, c).in(field);
    }
  RrefResult out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < e.cols() && row < e.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < e.rows() && e(pivot, col).is_zero()) ++pivot;
    if (pivot == e.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < e.cols(); ++c) std::swap(e(pivot, c), e(row, c));
    const Scalar inv = e(row, col).inverse();
    for (std::size_t c = col; c < e.cols(); ++c) e(row, c) *= inv;
    for (std::size_t r = 0; r < e.rows(); ++r) {
      if (r == row || e(r, col).is_zero()) continue;
      const Scalar f = e(r, col);
      for (std::size_t c = col; c < e.cols(); ++c)
        if (!e(row, c).is_zero()) e(r, c) -= f * e(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  out.echelon = std::move(e);
  return out;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar(m.field(), 1);
  }
  RrefResult red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] != n - 1) throw std::domain_error("inverse: matrix is singular");
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.echelon(r, n + c);
  return inv;
}

namespace {

Subspace kernel_from_rref(const Field& field, std::size_t cols, const std::vector<SparseVector>& rows) {
  std::vector<bool> is_pivot(cols, false);
  for (const auto& r : rows) is_pivot[r.entries().front().first] = true;
  std::vector<SparseVector> kernel;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    SparseVector v;
    // Pivot positions precede their free columns in each row, so collect then sort.
    std::vector<std::pair<std::size_t, Scalar>> entries;
    for (const auto& r : rows) {
      const Scalar x = r.at(f);
      if (!x.is_zero()) entries.emplace_back(r.entries().front().first, -x);
    }
    entries.emplace_back(f, Scalar(field, 1));
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [i, x] : entries) v.push_back(i, x);
    kernel.push_back(std::move(v));
  }
  return Subspace::span(field, cols, kernel);
}

}  // namespace

Subspace nullspace(const Matrix& m) {
  return nullspace(m.field(), m.cols(), [&] {
    std::vector<SparseVector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(SparseVector::from_dense(m.row(r)));
    return rows;
  }());
}

Subspace nullspace(const Field& field, std::size_t cols, const std::vector<SparseVector>& rows) {
  EchelonBuilder b(field, cols);
  for (const auto& r : rows) {
    b.insert(r);
    if (b.rank() == cols) break;
  }
  return kernel_from_rref(field, cols, b.reduced_basis());
}

Subspace row_space(const Matrix& m) {
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return Subspace::span(m.field(), m.cols(), rows);
}

Subspace column_space(const Matrix& m) { return row_space(m.transpose()); }

Subspace column_space(const SparseMatrix& m) {
  std::vector<SparseVector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(m.field(), m.rows(), cols);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersect: ambient dimension mismatch");
  if (!(a.field() == b.field())) throw FieldMismatch("intersect: subspaces over different fields");
  const std::size_t n = a.ambient_dim();
  // Zassenhaus: rows (u | u) for u in a and (w | 0) for w in b; the echelon
  // rows with vanishing left half span a ∩ b in their right half.
  EchelonBuilder builder(a.field(), 2 * n);
  for (const auto& u : a.sparse_basis()) {
    SparseVector row = u;
    for (const auto& [i, x] : u) row.push_back(n + i, x);
    builder.insert(std::move(row));
  }
  for (const auto& w : b.sparse_basis()) builder.insert(w);
  std::vector<SparseVector> meet;
  for (const auto& r : builder.reduced_basis()) {
    if (r.entries().front().first < n) continue;
    SparseVector v;
    for (const auto& [i, x] : r) v.push_back(i - n, x);
    meet.push_back(std::move(v));
  }
  return Subspace::span(a.field(), n, meet);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient dimension mismatch");
  std::vector<SparseVector> rows = a.sparse_basis();
  rows.insert(rows.end(), b.sparse_basis().begin(), b.sparse_basis().end());
  return Subspace::span(a.field(), a.ambient_dim(), rows);
}

Subspace complement_in(const Subspace& sub, const Subspace& within) {
  if (sub.ambient_dim() != within.ambient_dim()) throw std::invalid_argument("complement_in: ambient dimension mismatch");
  if (!within.contains(sub)) throw std::invalid_argument("complement_in: subspace is not contained in the enclosing space");
  EchelonBuilder builder(within.field(), within.ambient_dim());
  for (const auto& r : sub.sparse_basis()) builder.insert(r);
  std::vector<SparseVector> kept;
  for (const auto& r : within.sparse_basis()) {
    if (builder.rank() == within.dim()) break;
    if (builder.insert(r)) kept.push_back(r);
  }
  return Subspace::span(within.field(), within.ambient_dim(), kept);
}

SolveResult solve(const Matrix& a, const Vector& rhs) {
  if (rhs.size() != a.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = rhs[r];
  }
  RrefResult red = rref(aug);
  SolveResult out;
  out.kernel = nullspace(a);
  if (!red.pivots.empty() && red.pivots.back() == a.cols()) return out;
  Vector x = zero_vector(a.field(), a.cols());
  for (std::size_t k = 0; k < red.rank; ++k) x[red.pivots[k]] = red.echelon(k, a.cols());
  out.particular = std::move(x);
  return out;
}

}  // namespace nilrep
