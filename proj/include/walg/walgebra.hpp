#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "walg/reduction.hpp"

namespace walg {

struct TheoremReport {
  std::vector<std::size_t> h_dims;      // gr_n H
  std::vector<std::size_t> slice_dims;  // C[S]_n
  std::vector<std::size_t> nu_ranks;    // rank of nu on gr_n H
};

/// Degreewise dim gr_n H = dim C[S]_n and nu injective on gr_n H.
/// Throws TheoremFailure at the first failing degree.
TheoremReport verify_theorem(const ReductionCase& c, const HBasis& H, int n_max);

struct PairCheck {
  std::size_t i = 0, j = 0;  // indices into HBasis::elements
  int degree = 0;
  bool ok = false;
};

struct AlgebraClauseReport {
  std::vector<PairCheck> pairs;
  bool passed = true;
};

/// nu(gr(ab)) = nu(gr a) nu(gr b) for all basis pairs with deg a + deg b <= n_max.
AlgebraClauseReport algebra_clause(const ReductionCase& c, const HBasis& H);

/// nu(gr_{m+n-2}(ab - ba)) == {nu(gr a), nu(gr b)}_S (Lagrangian case).
bool gr_commutator_vs_poisson(const ReductionCase& c, const HBasis& H, const HElement& a,
                              const HElement& b);

struct PoissonClauseReport {
  std::vector<PairCheck> pairs;
  std::vector<std::pair<std::string, std::string>> brackets;  // nonzero brackets, rendered
  bool extension_independent = true;
  bool passed = true;
};

/// All basis pairs with deg a + deg b - 2 <= n_max. The slice bracket is
/// computed with both extensions.
PoissonClauseReport poisson_clause(const ReductionCase& c, const HBasis& H);

struct ComparisonReport {
  std::vector<std::size_t> dims_from, dims_to;  // gr dims
  std::vector<std::size_t> ranks;               // rank of F_n H -> F_n H
  DenseMatrix map;  // column j: coordinates of the image of element j
  bool multiplicative = true;
  std::size_t pairs_checked = 0;
};

/// The natural map H_{ell1} -> H_{ell2} for ell1 inside ell2 (same g, e).
/// Throws ComparisonFailure with the failing degree.
ComparisonReport ell_comparison(const ReductionCase& from, const HBasis& H_from,
                                const ReductionCase& to, const HBasis& H_to, int n_max);

/// The image in `to` of a canonical form of `from`: q_to applied to the
/// same element of U(g).
QElement transport(const ReductionCase& from, const ReductionCase& to, const QElement& v);

/// For maps H_0 -> H_1 and H_0 -> H_2 (reports r1, r2), checks that
/// r2 * r1^{-1} maps F_n H_1 onto F_n H_2 bijectively for every n.
bool composite_is_filtered_isomorphism(const ComparisonReport& r1, const ComparisonReport& r2,
                                       const HBasis& H1, const HBasis& H2, int n_max);

struct WhittakerReport {
  Subspace whittaker;  // coordinates on q_degree_basis(n)
  Subspace h;
  bool equal = false;
};

/// Wh(F_n Q) = {v : q(x v~) = chi(x) v for x in a} versus F_n H (Lagrangian).
WhittakerReport whittaker_vectors(const ReductionCase& c, const HBasis& H, int n);

struct CenterReport {
  QElement image;          // q(Omega)
  int degree = 0;
  KazhdanPolynomial nu;    // nu of the top symbol
  bool invariant = false;
  bool nonconstant = false;
};

/// Throws CenterCheckFailure when q(Omega) is not invariant, constant, or has
/// zero nu-image.
CenterReport center_injects(const ReductionCase& c);

}  // namespace walg
