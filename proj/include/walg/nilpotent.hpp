#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "walg/lie_algebra.hpp"
#include "walg/linalg.hpp"

namespace walg {

struct Sl2Triple {
  Vector e, h, f;
};

/// Completes a nonzero ad-nilpotent e to an sl2-triple. h is taken in the
/// image of ad e with [h,e] = 2e (free coordinates set to zero, with the
/// basis elements whose ad is not nilpotent eliminated first), then f is the
/// unique solution of [e,f] = h, [h,f] = -2f.
/// Throws InvalidInput for e = 0, NotNilpotent, or NoTripleFound.
Sl2Triple complete_sl2_triple(const LieAlgebra& g, const Vector& e);

/// True when the three bracket relations hold exactly.
bool is_sl2_triple(const LieAlgebra& g, const Sl2Triple& t);

/// Eigenspace decomposition of ad h.
struct GradedDecomposition {
  std::map<int, Subspace> pieces;  // only nonzero pieces are stored

  /// g(i); the zero subspace when i is not a weight.
  Subspace piece(int i) const;
  std::size_t dim(int i) const;
  int min_weight() const { return pieces.begin()->first; }
  int max_weight() const { return pieces.rbegin()->first; }
  /// Weight of a homogeneous vector, none if v is zero or inhomogeneous.
  std::optional<int> weight_of(const Vector& v) const;
  /// Direct sum of the pieces with weight in [lo, hi].
  Subspace range(int lo, int hi) const;
};

/// Throws NonIntegerEigenvalue when ad h is not diagonalizable with integer
/// eigenvalues.
GradedDecomposition ad_h_grading(const LieAlgebra& g, const Sl2Triple& t);

/// chi = kappa(e, .) / kappa(e, f).
struct CharacterChi {
  Vector covector;
  Rational kappa_ef;

  Rational operator()(const Vector& y) const { return dot(covector, y); }
};

CharacterChi chi(const LieAlgebra& g, const Sl2Triple& t);

struct SymplecticData {
  std::vector<Vector> gm1_basis;  // ambient coordinates
  DenseMatrix omega;              // omega(x, y) = chi([x, y]) on gm1_basis
  Subspace ell;                   // ambient subspaces inside g(-1)
  Subspace ell_perp;

  std::size_t gm1_dim() const { return gm1_basis.size(); }
  bool lagrangian() const { return 2 * ell.dim() == gm1_dim(); }
};

/// Throws NotInsideGm1, NotIsotropic, or DegenerateOmega.
SymplecticData symplectic_data(const LieAlgebra& g, const GradedDecomposition& grading,
                               const CharacterChi& chi,
                               const std::vector<Vector>& ell_spec);

/// omega(x, y) for ambient vectors x, y in g(-1).
Rational omega(const LieAlgebra& g, const CharacterChi& chi, const Vector& x,
               const Vector& y);

struct NilpotentPair {
  Subspace a;
  Subspace n_ell;
};

/// a = ell + sum_{i<=-2} g(i), n_ell = ell^perp + sum_{i<=-2} g(i); closure,
/// a inside n_ell, and chi([a, n_ell]) = 0 are verified (InternalError).
NilpotentPair make_nilpotent_pair(const LieAlgebra& g, const GradedDecomposition& grading,
                                  const CharacterChi& chi,
                                  const SymplecticData& symp);

Subspace ker_ad_f(const LieAlgebra& g, const Sl2Triple& t);

struct DecompositionReport {
  std::size_t a_perp_dim = 0;    // Killing annihilator of a in g
  std::size_t n_e_dim = 0;       // [n_ell, e]
  std::size_t ker_f_dim = 0;
  std::size_t intersection_dim = 0;
  std::size_t n_ell_dim = 0;
  std::size_t g0_dim = 0;
  std::size_t gm1_dim = 0;
};

/// a^perp = [n_ell, e] (+) Ker ad f with x -> [x, e] injective on n_ell.
/// Throws DecompositionFailure naming the failing datum.
DecompositionReport decomposition_check(const LieAlgebra& g, const Sl2Triple& t,
                                        const GradedDecomposition& grading,
                                        const NilpotentPair& pair);

/// Killing annihilator {y : kappa(x, y) = 0 for x in s}.
Subspace killing_annihilator(const LieAlgebra& g, const Subspace& s);

}  // namespace walg
