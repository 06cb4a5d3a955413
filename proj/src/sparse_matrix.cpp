#include "walg/sparse_matrix.hpp"

#include <string>

#include "walg/errors.hpp"

namespace walg {

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const DenseMatrix& m, std::size_t cols) {
  SparseMatrix s(m.size(), cols);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != cols)
      throw DimensionMismatch("from_dense: ragged rows");
    for (std::size_t j = 0; j < cols; ++j)
      if (m[i][j] != 0) s.data_[i].emplace(j, m[i][j]);
  }
  return s;
}

SparseMatrix SparseMatrix::from_dense(const DenseMatrix& m) {
  return from_dense(m, m.empty() ? 0 : m[0].size());
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

void SparseMatrix::check(std::size_t r, std::size_t c) const {
  if (r >= rows() || c >= cols_)
    throw DimensionMismatch("sparse matrix index (" + std::to_string(r) +
                            ", " + std::to_string(c) + ") out of range");
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  check(r, c);
  if (v == 0)
    data_[r].erase(c);
  else
    data_[r][c] = v;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  check(r, c);
  if (v == 0) return;
  auto [it, inserted] = data_[r].try_emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) data_[r].erase(it);
  }
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  check(r, c);
  auto it = data_[r].find(c);
  return it == data_[r].end() ? Rational(0) : it->second;
}

std::size_t SparseMatrix::append_row(SparseRow row) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->first >= cols_) throw DimensionMismatch("append_row: column");
    it = it->second == 0 ? row.erase(it) : std::next(it);
  }
  data_.push_back(std::move(row));
  return data_.size() - 1;
}

void SparseMatrix::append_rows(const SparseMatrix& below) {
  if (below.cols_ != cols_) throw DimensionMismatch("append_rows: columns");
  data_.insert(data_.end(), below.data_.begin(), below.data_.end());
}

Vector SparseMatrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw DimensionMismatch("apply: vector length");
  Vector y(rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& [j, v] : data_[i])
      if (x[j] != 0) y[i] += v * x[j];
  return y;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& [j, v] : data_[i]) t.data_[j].emplace(i, v);
  return t;
}

DenseMatrix SparseMatrix::to_dense() const {
  auto d = zero_matrix(rows(), cols_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& [j, v] : data_[i]) d[i][j] = v;
  return d;
}

}  // namespace walg
