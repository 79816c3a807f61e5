#include "grtor/linalg.hpp"

#include <algorithm>

#include "grtor/error.hpp"

namespace grtor {

Vector zero_vector(const FieldSpec& field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

bool is_zero(std::span<const Scalar> v) noexcept {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::from_rows(FieldSpec field, std::size_t cols, std::vector<Vector> rows) {
  Matrix m(field, 0, cols);
  m.data_.reserve(rows.size() * cols);
  for (auto& r : rows) {
    if (r.size() != cols) throw UsageError("matrix rows of unequal length");
    for (auto& s : r) m.data_.push_back(std::move(s));
    ++m.rows_;
  }
  return m;
}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw UsageError("matrix dimension mismatch in product");
  Matrix out(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Scalar& b = other(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  }
  return out;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw UsageError("vector length mismatch in matrix application");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t k = 0; k < cols_; ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, k);
      if (!a.is_zero()) out[i] += a * v[k];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(i, cols[j]);
  }
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix out(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(rows[i], j);
  }
  return out;
}

void Matrix::append_row(std::span<const Scalar> v) {
  if (v.size() != cols_) throw UsageError("row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

bool Matrix::is_zero() const noexcept { return grtor::is_zero(data_); }

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RowEchelon rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t r = lead_row;
    while (r < m.rows() && m(r, c).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != lead_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(lead_row, j));
    }
    Scalar inv = m(lead_row, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (!m(lead_row, j).is_zero()) m(lead_row, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(lead_row, j).is_zero()) m(i, j) -= f * m(lead_row, j);
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  std::vector<std::size_t> keep(pivots.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  return {m.select_rows(keep), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  EchelonBasis basis(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = m.row(i);
    basis.insert(Vector(row.begin(), row.end()));
  }
  return basis.rank();
}

Matrix kernel(const Matrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix out(m.field(), 0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[free] = Scalar::one(m.field());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    out.append_row(v);
  }
  return out;
}

Matrix column_space(const Matrix& m) { return rref(m.transpose()).reduced; }

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw UsageError("right-hand side length mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  RowEchelon e = rref(std::move(aug));
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw UsageError("only square matrices have inverses");
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one(m.field());
  }
  RowEchelon e = rref(std::move(aug));
  if (e.pivots.size() != n || (n > 0 && e.pivots.back() != n - 1)) throw UsageError("matrix is singular");
  Matrix out(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e.reduced(i, n + j);
  }
  return out;
}

EchelonBasis::EchelonBasis(FieldSpec field, std::size_t dim) : field_(field), dim_(dim) {}

bool EchelonBasis::reduce(Vector& v) const {
  if (v.size() != dim_) throw UsageError("vector length mismatch in echelon reduction");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (v[p].is_zero()) continue;
    Scalar f = v[p];
    const Vector& row = rows_[k];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!row[j].is_zero()) v[j] -= f * row[j];
    }
  }
  return grtor::is_zero(v);
}

bool EchelonBasis::insert(Vector v) {
  if (reduce(v)) return false;
  std::size_t p = 0;
  while (v[p].is_zero()) ++p;
  Scalar inv = v[p].inverse();
  for (auto& s : v) {
    if (!s.is_zero()) s *= inv;
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool SparseEchelon::reduce(SparseVector& v) const {
  auto it = v.begin();
  while (it != v.end()) {
    if (it->second.is_zero()) {
      it = v.erase(it);
      continue;
    }
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const std::size_t key = it->first;
    const Scalar f = it->second;
    for (const auto& [idx, c] : row->second) {
      auto [pos, inserted] = v.try_emplace(idx, Scalar::zero(field_));
      pos->second -= f * c;
    }
    it = v.upper_bound(key);
    v.erase(key);
  }
  return v.empty();
}

bool SparseEchelon::insert(SparseVector v) {
  if (reduce(v)) return false;
  const Scalar inv = v.begin()->second.inverse();
  std::vector<std::pair<std::size_t, Scalar>> row;
  row.reserve(v.size());
  for (auto& [idx, c] : v) row.emplace_back(idx, c * inv);
  rows_.emplace(row.front().first, std::move(row));
  return true;
}

}  // namespace grtor
