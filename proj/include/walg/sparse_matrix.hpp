#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "walg/rational.hpp"

namespace walg {

using SparseRow = std::map<std::size_t, Rational>;

/// Rational matrix stored row-wise; zero entries are never stored.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols)
      : cols_(cols), data_(rows) {}

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const DenseMatrix& m, std::size_t cols);
  static SparseMatrix from_dense(const DenseMatrix& m);

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;

  void set(std::size_t r, std::size_t c, const Rational& v);
  void add(std::size_t r, std::size_t c, const Rational& v);
  Rational at(std::size_t r, std::size_t c) const;
  const SparseRow& row(std::size_t r) const { return data_.at(r); }

  /// Appends a row; returns its index.
  std::size_t append_row(SparseRow row = {});
  void append_rows(const SparseMatrix& below);

  Vector apply(const Vector& x) const;
  SparseMatrix transpose() const;
  DenseMatrix to_dense() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  void check(std::size_t r, std::size_t c) const;

  std::size_t cols_ = 0;
  std::vector<SparseRow> data_;
};

}  // namespace walg
