#include "super3lie/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "super3lie/errors.hpp"

namespace super3lie {

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b[i].is_zero()) out[i] += b[i];
  }
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b[i].is_zero()) out[i] -= b[i];
  }
  return out;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector out(v.size());
  if (s.is_zero()) return out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out[i] = s * v[i];
  }
  return out;
}

void axpy(Vector& y, const Rational& s, std::span<const Rational> x) {
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += s * x[i];
  }
}

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

bool Matrix::is_zero() const { return super3lie::is_zero(data_); }

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Vector Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = at(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b.at(k, j);
        if (!y.is_zero()) out.at(i, j) += x * y;
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix size mismatch");
  Matrix out(a);
  for (std::size_t i = 0; i < out.data_.size(); ++i) {
    if (!b.data_[i].is_zero()) out.data_[i] += b.data_[i];
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix size mismatch");
  Matrix out(a);
  for (std::size_t i = 0; i < out.data_.size(); ++i) {
    if (!b.data_[i].is_zero()) out.data_[i] -= b.data_[i];
  }
  return out;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix out(m.rows_, m.cols_);
  if (s.is_zero()) return out;
  for (std::size_t i = 0; i < m.data_.size(); ++i) {
    if (!m.data_[i].is_zero()) out.data_[i] = s * m.data_[i];
  }
  return out;
}

// ---------------------------------------------------------- SparseMatrix

void SparseMatrix::push_row(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.col < b.col; });
  std::size_t i = 0;
  while (i < entries.size()) {
    std::size_t col = entries[i].col;
    if (col >= cols_) throw std::out_of_range("sparse column out of range");
    Rational sum = std::move(entries[i].value);
    std::size_t j = i + 1;
    while (j < entries.size() && entries[j].col == col) {
      sum += entries[j].value;
      ++j;
    }
    if (!sum.is_zero()) entries_.push_back({col, std::move(sum)});
    i = j;
  }
  row_start_.push_back(entries_.size());
}

Vector SparseMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("sparse apply size mismatch");
  Vector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    Rational acc;
    for (const Entry& e : row(r)) {
      if (!v[e.col].is_zero()) acc += e.value * v[e.col];
    }
    out[r] = std::move(acc);
  }
  return out;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows(), cols_);
  for (std::size_t r = 0; r < rows(); ++r)
    for (const Entry& e : row(r)) m.at(r, e.col) = e.value;
  return m;
}

Vector SparseMatrix::column(std::size_t c) const {
  Vector v(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (const Entry& e : row(r)) {
      if (e.col == c) v[r] = e.value;
    }
  }
  return v;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows()) throw std::invalid_argument("sparse product size mismatch");
  SparseMatrix out(rhs.cols());
  Vector acc(rhs.cols());
  std::vector<char> touched(rhs.cols(), 0);
  std::vector<std::size_t> touched_list;
  for (std::size_t r = 0; r < rows(); ++r) {
    for (const Entry& a : row(r)) {
      for (const Entry& b : rhs.row(a.col)) {
        acc[b.col] += a.value * b.value;
        if (!touched[b.col]) {
          touched[b.col] = 1;
          touched_list.push_back(b.col);
        }
      }
    }
    std::vector<Entry> entries;
    for (std::size_t c : touched_list) {
      if (!acc[c].is_zero()) entries.push_back({c, acc[c]});
      acc[c] = Rational();
      touched[c] = 0;
    }
    touched_list.clear();
    out.push_row(std::move(entries));
  }
  return out;
}

// ------------------------------------------------------------ RowEchelon

void RowEchelon::eliminate_with(Vector& row) const {
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const Rational& coeff = row[pivots_[k]];
    if (coeff.is_zero()) continue;
    Rational s = -coeff;
    axpy(row, s, rows_[k]);
  }
}

bool RowEchelon::finish_insert(Vector row) {
  std::size_t pivot = cols_;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!row[c].is_zero()) {
      pivot = c;
      break;
    }
  }
  if (pivot == cols_) return false;
  if (!row[pivot].is_one()) {
    Rational inv = row[pivot].inverse();
    for (std::size_t c = pivot; c < cols_; ++c) {
      if (!row[c].is_zero()) row[c] *= inv;
    }
  }
  for (Vector& other : rows_) {
    if (other[pivot].is_zero()) continue;
    Rational s = -other[pivot];
    axpy(other, s, row);
  }
  row_of_pivot_[pivot] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

bool RowEchelon::insert(Vector row) {
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  eliminate_with(row);
  return finish_insert(std::move(row));
}

bool RowEchelon::insert_sparse(std::span<const SparseMatrix::Entry> row) {
  if (row.empty()) return false;
  Vector dense(cols_);
  for (const auto& e : row) dense.at(e.col) = e.value;
  eliminate_with(dense);
  return finish_insert(std::move(dense));
}

Vector RowEchelon::reduce(Vector v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  eliminate_with(v);
  return v;
}

bool RowEchelon::contains(std::span<const Rational> v) const {
  return super3lie::is_zero(reduce(Vector(v.begin(), v.end())));
}

std::vector<std::size_t> RowEchelon::sorted_pivots() const {
  std::vector<std::size_t> p = pivots_;
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<Vector> RowEchelon::sorted_rows() const {
  std::vector<Vector> out;
  out.reserve(rows_.size());
  for (std::size_t p : sorted_pivots()) out.push_back(rows_[static_cast<std::size_t>(row_of_pivot_[p])]);
  return out;
}

RrefResult rref(const Matrix& m) {
  RowEchelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    e.insert(Vector(row.begin(), row.end()));
  }
  RrefResult result{Matrix(m.rows(), m.cols()), e.sorted_pivots()};
  auto rows = e.sorted_rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) result.reduced.at(r, c) = rows[r][c];
  return result;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  std::size_t n = m.rows();
  Matrix augmented(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented.at(r, c) = m.at(r, c);
    augmented.at(r, n + r) = 1;
  }
  RrefResult red = rref(augmented);
  if (red.rank() < n || (n > 0 && red.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.at(r, c) = red.reduced.at(r, n + c);
  return out;
}

// -------------------------------------------------------------- Subspace

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  RowEchelon e(ambient_dim);
  for (const Vector& v : vectors) e.insert(v);
  return Subspace(std::move(e));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  RowEchelon e(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) e.insert(unit_vector(ambient_dim, i));
  return Subspace(std::move(e));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) return false;
  for (const Vector& v : other.basis()) {
    if (!contains(v)) return false;
  }
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_dim() == b.ambient_dim() && a.basis() == b.basis();
}

namespace {

Subspace kernel_from_echelon(const RowEchelon& e) {
  std::size_t n = e.cols();
  std::vector<Vector> rows = e.sorted_rows();
  std::vector<std::size_t> pivots = e.sorted_pivots();
  std::vector<char> is_pivot(n, 0);
  for (std::size_t p : pivots) is_pivot[p] = 1;
  std::vector<Vector> kernel;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      if (!rows[k][f].is_zero()) v[pivots[k]] = -rows[k][f];
    }
    kernel.push_back(std::move(v));
  }
  return Subspace::span(n, kernel);
}

}  // namespace

Subspace kernel_basis(const Matrix& m) {
  RowEchelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    if (!super3lie::is_zero(row)) e.insert(Vector(row.begin(), row.end()));
  }
  return kernel_from_echelon(e);
}

Subspace kernel_basis(const SparseMatrix& m) {
  RowEchelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    e.insert_sparse(m.row(r));
    if (e.rank() == m.cols()) break;
  }
  return kernel_from_echelon(e);
}

Subspace image(const SparseMatrix& m) {
  std::vector<Vector> columns(m.cols(), Vector(m.rows()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& e : m.row(r)) columns[e.col][r] = e.value;
  return Subspace::span(m.rows(), columns);
}

Subspace image(const Matrix& m) {
  std::vector<Vector> columns;
  for (std::size_t c = 0; c < m.cols(); ++c) columns.push_back(m.column(c));
  return Subspace::span(m.rows(), columns);
}

namespace {

std::optional<Vector> solution_from(const RowEchelon& e, std::size_t n) {
  std::vector<Vector> rows = e.sorted_rows();
  std::vector<std::size_t> pivots = e.sorted_pivots();
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  Vector x(n);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = rows[k][n];
  return x;
}

}  // namespace

std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  RowEchelon e(m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vector row(m.cols() + 1);
    for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m.at(r, c);
    row[m.cols()] = b[r];
    e.insert(std::move(row));
  }
  return solution_from(e, m.cols());
}

std::optional<Vector> solve(const SparseMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  std::size_t n = m.cols();
  RowEchelon e(n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.row(r).empty() && b[r].is_zero()) continue;
    Vector row(n + 1);
    for (const auto& entry : m.row(r)) row[entry.col] = entry.value;
    row[n] = b[r];
    e.insert(std::move(row));
  }
  return solution_from(e, n);
}

// --------------------------------------------------------- QuotientData

QuotientData::QuotientData(const Subspace& big, const Subspace& small) : big_(big) {
  if (big.ambient_dim() != small.ambient_dim() || !big.contains(small)) {
    throw Error(ErrorKind::NotASubspace, "quotient: small subspace is not contained in big");
  }
  std::size_t n = big.ambient_dim();
  RowEchelon grow = small.echelon();
  for (const Vector& b : big.basis()) {
    if (grow.insert(b)) representatives_.push_back(b);
  }
  small_dim_ = small.dim();
  std::vector<Vector> all = representatives_;
  for (const Vector& s : small.basis()) all.push_back(s);
  std::size_t k = all.size();
  if (k == 0) return;
  Matrix stacked = Matrix::from_rows(all, n);
  pivot_columns_ = rref(stacked).pivots;
  // stacked restricted to its pivot columns is invertible; invert it.
  Matrix square(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) square.at(r, c) = stacked.at(r, pivot_columns_[c]);
  coordinate_map_ = *inverse(square);
}

Vector QuotientData::reduce(std::span<const Rational> v) const {
  if (v.size() != big_.ambient_dim()) throw std::invalid_argument("quotient: vector length mismatch");
  if (!big_.contains(v)) throw Error(ErrorKind::NotInSubspace, "quotient: vector not in the big subspace");
  Vector coords(dim());
  std::size_t k = pivot_columns_.size();
  // c = v[P] * inverse(stacked[:, P]); coordinates along the representatives
  // are the first dim() entries.
  for (std::size_t j = 0; j < dim(); ++j) {
    Rational acc;
    for (std::size_t i = 0; i < k; ++i) {
      const Rational& x = v[pivot_columns_[i]];
      if (!x.is_zero()) acc += x * coordinate_map_.at(i, j);
    }
    coords[j] = std::move(acc);
  }
  return coords;
}

}  // namespace super3lie
