#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "walg/lie_algebra.hpp"
#include "walg/nilpotent.hpp"

namespace walg {

/// Homogeneous basis of g adapted to the reduction data. Order:
///   complement of a: g(i) for i >= 0 (weight descending), then the part of
///   g(-1) outside ell (first ell^perp beyond ell, then the rest);
///   a: ell, then g(-2), g(-3), ...
/// Within each piece vectors follow the echelon order of the ambient basis.
/// With this order a is spanned by the trailing vectors and n_ell is a
/// coordinate subspace.
struct AdaptedBasis {
  std::vector<Vector> vectors;  // ambient coordinates
  std::vector<std::string> labels;
  std::vector<int> weights;
  std::size_t complement_dim = 0;
  std::vector<std::size_t> n_ell_indices;  // ascending
  std::shared_ptr<const LieAlgebra> algebra;  // g in this basis

  Vector chi_values;      // chi(b_k)
  Sl2Triple triple;       // in adapted coordinates

  /// Ker ad f: weight 0, -1, -2, ... pieces; ambient coordinates.
  std::vector<Vector> slice_basis;
  std::vector<int> slice_weights;
  /// pairing[j][k] = kappa(z_j, b_k) / kappa(e, f)
  DenseMatrix pairing;

  std::size_t dim() const { return vectors.size(); }
  bool in_a(std::size_t k) const { return k >= complement_dim; }
  /// Kazhdan degree of the coordinate b_k: weight + 2.
  int kazhdan_degree(std::size_t k) const { return weights[k] + 2; }
  /// Adapted coordinates of an ambient vector.
  Vector to_adapted(const Vector& ambient) const;
  Vector to_ambient(const Vector& adapted) const;

  DenseMatrix to_adapted_matrix;  // inverse of the column matrix of vectors
};

AdaptedBasis adapted_basis(const LieAlgebra& g, const Sl2Triple& t,
                           const GradedDecomposition& grading, const CharacterChi& chi,
                           const SymplecticData& symp, const NilpotentPair& pair);

}  // namespace walg
