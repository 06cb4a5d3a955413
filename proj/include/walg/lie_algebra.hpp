#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "walg/linalg.hpp"
#include "walg/rational.hpp"
#include "walg/sparse_matrix.hpp"

namespace walg {

using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// One row of a bracket table: [x_i, x_j] for i < j.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  SparseVector value;
};

/// Finite-dimensional Lie algebra over Q given by structure constants in a
/// fixed ordered basis. Only validated instances can be constructed: the
/// Jacobi identity holds exactly and the Killing form is nondegenerate.
class LieAlgebra {
 public:
  /// The zero-dimensional algebra; real instances come from make_lie_algebra.
  LieAlgebra() = default;

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  /// Throws InvalidInput for unknown labels.
  std::size_t index_of(std::string_view label) const;

  /// [x_i, x_j] for any pair, antisymmetry included.
  const SparseVector& bracket_basis(std::size_t i, std::size_t j) const {
    return table_[i * dim() + j];
  }
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of ad x; column k is [x, x_k].
  SparseMatrix ad(const Vector& x) const;

  const DenseMatrix& killing() const { return killing_; }
  Rational killing(const Vector& x, const Vector& y) const;

  Vector basis_vector(std::size_t i) const { return unit_vector(dim(), i); }

  /// The bracket data for i < j, as accepted by make_lie_algebra.
  std::vector<BracketEntry> bracket_table() const;

 private:
  friend LieAlgebra make_lie_algebra(std::vector<std::string>,
                                     const std::vector<BracketEntry>&);

  std::vector<std::string> labels_;
  std::vector<SparseVector> table_;
  DenseMatrix killing_;
};

/// Validates and builds; throws JacobiViolation or DegenerateKillingForm.
/// Pairs absent from the table bracket to zero.
LieAlgebra make_lie_algebra(std::vector<std::string> labels,
                            const std::vector<BracketEntry>& table);

/// sl_n in the basis E_ij (i != j, row-major) followed by
/// H_i = E_ii - E_{i+1,i+1}. Labels are "E12", "H1", ...
LieAlgebra make_sln(std::size_t n);

/// Traceless n x n matrix of a coordinate vector of make_sln(n).
DenseMatrix sln_matrix(std::size_t n, const Vector& x);
/// Coordinates in make_sln(n) of a traceless matrix.
Vector sln_coordinates(std::size_t n, const DenseMatrix& m);

/// kappa(x_i, x_j) = trace(ad x_i ad x_j).
DenseMatrix killing_form(const LieAlgebra& g);

/// Expresses the algebra in a new basis whose vectors (old coordinates) are
/// given; the result is validated like any other algebra.
LieAlgebra change_basis(const LieAlgebra& g, const std::vector<Vector>& basis,
                        std::vector<std::string> labels);

/// Human-readable linear combination, e.g. "2*E12 - H1".
std::string format_vector(const LieAlgebra& g, const Vector& v);

}  // namespace walg
