#pragma once

#include <map>
#include <string>
#include <vector>

#include "qhopf/cyclotomic.hpp"

namespace qhopf {

/// Dense matrix over a cyclotomic field, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix diagonal(const std::vector<CycScalar>& d);

  int rows() const { return r_; }
  int cols() const { return c_; }
  CycScalar& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const CycScalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  bool is_zero() const;
  bool is_diagonal() const;
  int nonzero_count() const;
  Matrix transpose() const;
  Matrix pow(int e) const;  // e >= 0
  CycScalar trace() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const CycScalar& s, const Matrix& a);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<CycScalar> a_;
};

using SparseRow = std::map<int, CycScalar>;

/// Incremental exact row reduction; rows are kept in reduced echelon form.
class RowReducer {
 public:
  explicit RowReducer(int ncols) : n_(ncols) {}
  /// Returns true if the row was independent of those already added.
  bool add(SparseRow row);
  int rank() const { return static_cast<int>(pivots_.size()); }
  int ncols() const { return n_; }
  /// Kernel basis: one vector per free column, free entry 1, ordered by column.
  std::vector<std::vector<CycScalar>> kernel() const;
  const std::map<int, SparseRow>& pivot_rows() const { return pivots_; }

 private:
  int n_;
  std::map<int, SparseRow> pivots_;  // pivot column -> row with leading 1
};

std::vector<std::vector<CycScalar>> kernel(const Matrix& m);
int rank(const Matrix& m);

}  // namespace qhopf
