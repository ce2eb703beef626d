#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nilrep/scalar.hpp"

namespace nilrep {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& field, std::size_t n);
Vector unit_vector(const Field& field, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

/// Sorted list of (index, nonzero value) pairs.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseVector() = default;
  static SparseVector from_dense(const Vector& v);
  static SparseVector unit(std::size_t i, const Scalar& value = Scalar(1));

  Vector to_dense(const Field& field, std::size_t n) const;

  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  /// Value at index i (zero when absent).
  Scalar at(std::size_t i) const;
  /// Appends an entry; indices must be pushed in increasing order.
  void push_back(std::size_t i, Scalar value);
  /// Adds `value` at index i, keeping order; drops the entry if it cancels.
  void add(std::size_t i, const Scalar& value);

  /// this += factor * other
  void axpy(const Scalar& factor, const SparseVector& other);
  void scale(const Scalar& factor);

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& field, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_rows(const Field& field, const std::vector<Vector>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  bool is_zero() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Scalar& s) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Column-major sparse matrix; each column is a SparseVector of row indices.
/// Used for module actions, whose columns carry few nonzeros.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(const Field& field, std::size_t rows, std::size_t cols);
  static SparseMatrix from_dense(const Matrix& m);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseVector& column(std::size_t c) const { return columns_[c]; }
  void set_column(std::size_t c, SparseVector col);
  Scalar at(std::size_t r, std::size_t c) const { return columns_[c].at(r); }
  void set(std::size_t r, std::size_t c, const Scalar& value);
  std::size_t nnz() const;
  bool is_zero() const;

  Matrix to_dense() const;
  SparseMatrix transpose() const;
  SparseVector apply(const SparseVector& v) const;
  Vector apply(const Vector& v) const;
  SparseMatrix operator*(const SparseMatrix& rhs) const;
  SparseMatrix operator+(const SparseMatrix& rhs) const;
  SparseMatrix operator-(const SparseMatrix& rhs) const;
  SparseMatrix scaled(const Scalar& s) const;
  /// this += factor * other
  void axpy(const Scalar& factor, const SparseMatrix& other);

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> columns_;
};

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

/// Incremental row echelon form over sparse rows.
///
/// Rows are kept normalised (leading entry 1) and reduced against earlier
/// pivots only; reduced_basis() finishes the back substitution.
class EchelonBuilder {
 public:
  EchelonBuilder(const Field& field, std::size_t ambient);

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  /// Reduces v against the current rows; the result is zero iff v lies in the span.
  SparseVector sift(SparseVector v) const;
  /// Inserts v; returns false if v was already in the span.
  bool insert(SparseVector v);
  /// Rows in reduced row echelon form, sorted by pivot.
  std::vector<SparseVector> reduced_basis() const;

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<SparseVector> rows_;
  std::vector<long> pivot_row_;
};

/// A subspace of K^n, stored by its reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(const Field& field, std::size_t ambient);
  static Subspace full(const Field& field, std::size_t ambient);
  static Subspace span(const Field& field, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace span(const Field& field, std::size_t ambient, const std::vector<SparseVector>& vectors);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<SparseVector>& sparse_basis() const { return basis_; }
  std::vector<Vector> basis() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const SparseVector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v with respect to basis(); nullopt when v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(const Field& field, std::size_t ambient, std::vector<SparseVector> rref_rows);
  SparseVector residue(SparseVector v) const;

  Field field_;
  std::size_t ambient_ = 0;
  std::vector<SparseVector> basis_;
  std::vector<std::size_t> pivots_;
};

struct RrefResult {
  Matrix echelon;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Throws FieldMismatch if entries belong to
/// a field other than the matrix's.
RrefResult rref(const Matrix& m);

/// Inverse of a square matrix; throws std::domain_error if singular.
Matrix inverse(const Matrix& m);

Subspace nullspace(const Matrix& m);
/// Kernel of the linear system whose rows are given sparsely.
Subspace nullspace(const Field& field, std::size_t cols, const std::vector<SparseVector>& rows);
Subspace row_space(const Matrix& m);
Subspace column_space(const Matrix& m);
Subspace column_space(const SparseMatrix& m);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// A complement W of `sub` inside `within` (W + sub = within, W ∩ sub = 0).
///
/// Walks the echelon basis of `within` in pivot order and keeps each vector
/// that is independent of `sub` and the vectors kept so far. Throws
/// std::invalid_argument unless sub ⊆ within.
Subspace complement_in(const Subspace& sub, const Subspace& within);

struct SolveResult {
  std::optional<Vector> particular;  // nullopt: inconsistent
  Subspace kernel;
};

SolveResult solve(const Matrix& a, const Vector& rhs);

}  // namespace nilrep
