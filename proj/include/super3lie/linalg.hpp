#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "super3lie/rational.hpp"

namespace super3lie {

using Vector = std::vector<Rational>;

bool is_zero(std::span<const Rational> v);
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
/// y += s * x
void axpy(Vector& y, const Rational& s, std::span<const Rational> x);

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector column(std::size_t c) const;
  const std::vector<Rational>& data() const { return data_; }

  bool is_zero() const;
  Matrix transpose() const;
  Vector apply(std::span<const Rational> v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Compressed sparse rows. Used for the tall coboundary operators whose rows
/// touch only a handful of columns.
class SparseMatrix {
 public:
  struct Entry {
    std::size_t col;
    Rational value;
  };

  explicit SparseMatrix(std::size_t cols = 0) : cols_(cols) { row_start_.push_back(0); }

  /// Appends a row. Entries may be unsorted and repeated; they are merged and
  /// zeros dropped.
  void push_row(std::vector<Entry> entries);

  std::size_t rows() const { return row_start_.size() - 1; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return entries_.size(); }
  std::span<const Entry> row(std::size_t r) const {
    return {entries_.data() + row_start_[r], row_start_[r + 1] - row_start_[r]};
  }

  Vector apply(std::span<const Rational> v) const;
  Matrix to_dense() const;
  /// Column c as a dense vector of length rows().
  Vector column(std::size_t c) const;
  /// this * rhs, with rhs dense-ified column by column lazily.
  SparseMatrix multiply(const SparseMatrix& rhs) const;
  bool is_zero() const { return entries_.empty(); }

 private:
  std::size_t cols_;
  std::vector<std::size_t> row_start_;
  std::vector<Entry> entries_;
};

/// Incrementally maintained reduced row echelon basis of a row space. Rows are
/// kept fully reduced and sorted by pivot, so the stored basis is the unique
/// canonical representative of the span.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols = 0) : cols_(cols), row_of_pivot_(cols, -1) {}

  /// Reduces `row` against the basis and, if something nonzero remains,
  /// appends it. Returns true when the rank grew.
  bool insert(Vector row);
  bool insert_sparse(std::span<const SparseMatrix::Entry> row);
  /// Remainder of v after eliminating every pivot column.
  Vector reduce(Vector v) const;
  bool contains(std::span<const Rational> v) const;

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  /// Basis rows ordered by increasing pivot column.
  std::vector<Vector> sorted_rows() const;
  std::vector<std::size_t> sorted_pivots() const;

 private:
  void eliminate_with(Vector& row) const;
  bool finish_insert(Vector row);

  std::size_t cols_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> row_of_pivot_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

RrefResult rref(const Matrix& m);
/// Inverse of a square matrix, or nothing when it is singular.
std::optional<Matrix> inverse(const Matrix& m);

/// A linear subspace of Q^n held by its canonical reduced echelon basis, so two
/// subspaces are equal exactly when their bases are equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : echelon_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return echelon_.cols(); }
  std::size_t dim() const { return echelon_.rank(); }
  std::vector<Vector> basis() const { return echelon_.sorted_rows(); }
  bool contains(std::span<const Rational> v) const { return echelon_.contains(v); }
  bool contains(const Subspace& other) const;
  const RowEchelon& echelon() const { return echelon_; }

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  explicit Subspace(RowEchelon echelon) : echelon_(std::move(echelon)) {}
  RowEchelon echelon_;
  friend Subspace kernel_basis(const Matrix& m);
  friend Subspace kernel_basis(const SparseMatrix& m);
};

Subspace kernel_basis(const Matrix& m);
Subspace kernel_basis(const SparseMatrix& m);
/// Column space of m.
Subspace image(const SparseMatrix& m);
Subspace image(const Matrix& m);

/// One solution of m x = b with free variables set to zero, or nothing when b
/// is outside the column space.
std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b);
std::optional<Vector> solve(const SparseMatrix& m, std::span<const Rational> b);

/// Realizes big/small: a fixed complement of `small` inside `big` and the
/// coordinate map onto it.
class QuotientData {
 public:
  /// Throws Error(NotASubspace) when small is not contained in big.
  QuotientData(const Subspace& big, const Subspace& small);

  std::size_t dim() const { return representatives_.size(); }
  const std::vector<Vector>& representatives() const { return representatives_; }
  /// Canonical coordinates of v modulo `small`. v must lie in `big`
  /// (Error(NotInSubspace) otherwise); the result is zero iff v is in small.
  Vector reduce(std::span<const Rational> v) const;

 private:
  Subspace big_;
  std::vector<Vector> representatives_;
  std::size_t small_dim_ = 0;
  std::vector<std::size_t> pivot_columns_;
  Matrix coordinate_map_;  // (dim + small_dim) x (dim + small_dim)
};

}  // namespace super3lie
