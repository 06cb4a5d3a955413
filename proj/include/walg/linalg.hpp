#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "walg/rational.hpp"
#include "walg/sparse_matrix.hpp"

namespace walg {

struct EliminationOptions {
  /// Matrices with both dimensions at most this size go through dense
  /// Bareiss elimination; larger ones use sparse fraction-free elimination.
  std::size_t dense_threshold = 64;
};

/// Reduced row echelon form of a row space: pivot columns strictly
/// increasing, pivot entries 1, pivot columns zero in every other row.
struct RowEchelon {
  std::size_t cols = 0;
  std::vector<SparseRow> rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return rows.size(); }
};

RowEchelon reduced_row_echelon(const SparseMatrix& m,
                               const EliminationOptions& opts = {});

/// Both elimination routes, exposed so they can be cross-checked.
RowEchelon reduced_row_echelon_dense(const SparseMatrix& m);
RowEchelon reduced_row_echelon_sparse(const SparseMatrix& m);

/// Subspace of Q^n held by its canonical reduced echelon basis, so two
/// subspaces are equal exactly when their stored bases are identical.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim,
                       const std::vector<Vector>& vectors);
  static Subspace whole(std::size_t ambient_dim);
  static Subspace from_echelon(const RowEchelon& e);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const& { return basis_; }
  std::vector<Vector> basis() && { return std::move(basis_); }
  const std::vector<std::size_t>& pivots() const& { return pivots_; }
  std::vector<std::size_t> pivots() && { return std::move(pivots_); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the stored basis, or none if v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;

  /// {y : <x, y> = 0 for all x in this} under the standard dot product.
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const SparseMatrix& m, const EliminationOptions& opts = {});
Subspace kernel(const SparseMatrix& m, const EliminationOptions& opts = {});

/// Some x with m x = b, checked by substitution, or none if inconsistent.
std::optional<Vector> solve(const SparseMatrix& m, const Vector& b,
                            const EliminationOptions& opts = {});

/// (U + V, U ∩ V).
std::pair<Subspace, Subspace> sum_and_intersection(const Subspace& u,
                                                   const Subspace& v);

/// Inverse of a square matrix; throws InvalidInput when singular.
DenseMatrix inverse(const DenseMatrix& m);

}  // namespace walg
