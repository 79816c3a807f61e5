#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "grtor/scalar.hpp"

namespace grtor {

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& field, std::size_t n);
bool is_zero(std::span<const Scalar> v) noexcept;

/// Dense row-major matrix over an exact field.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
  /// Rows must share one length; an empty list gives a 0 x cols matrix.
  static Matrix from_rows(FieldSpec field, std::size_t cols, std::vector<Vector> rows);
  static Matrix identity(FieldSpec field, std::size_t n);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  Matrix operator*(const Matrix& other) const;
  /// this * v for a column vector v.
  Vector apply(std::span<const Scalar> v) const;
  Matrix transpose() const;
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  void append_row(std::span<const Scalar> v);
  bool is_zero() const noexcept;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form; only nonzero rows are kept.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Rows form a basis of {x : m x = 0}.
Matrix kernel(const Matrix& m);
/// Rows form a basis of the column space of m.
Matrix column_space(const Matrix& m);
/// Some x with m x = b, if one exists.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);
/// Throws UsageError for singular or non-square input.
Matrix inverse(const Matrix& m);

/// Incrementally built echelon basis of a subspace of k^n. Rows have pivot 1
/// and vanish at the pivots of earlier rows.
class EchelonBasis {
 public:
  EchelonBasis(FieldSpec field, std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  std::span<const std::size_t> pivots() const noexcept { return pivots_; }
  const std::vector<Vector>& rows() const noexcept { return rows_; }

  /// Eliminates the pivot coordinates of v. Returns true when v reduces to 0.
  bool reduce(Vector& v) const;
  /// Adds v when it is independent of the current rows.
  bool insert(Vector v);

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

using SparseVector = std::map<std::size_t, Scalar>;

/// Echelon basis over sparse rows; pivots are the smallest indices.
class SparseEchelon {
 public:
  explicit SparseEchelon(FieldSpec field) : field_(field) {}

  std::size_t rank() const noexcept { return rows_.size(); }
  /// Returns true when v reduces to 0.
  bool reduce(SparseVector& v) const;
  bool insert(SparseVector v);
  bool contains(SparseVector v) const { return reduce(v); }
  bool is_pivot(std::size_t index) const { return rows_.count(index) != 0; }

 private:
  FieldSpec field_;
  std::map<std::size_t, std::vector<std::pair<std::size_t, Scalar>>> rows_;
};

}  // namespace grtor
