#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "walg/adapted_basis.hpp"
#include "walg/nilpotent.hpp"
#include "walg/pbw.hpp"
#include "walg/slice.hpp"

namespace walg {

struct CaseOptions {
  bool memoize = true;  // PBW straightening cache
};

/// Everything derived from (g, e, ell) that Q_ell and H_ell are built from.
struct ReductionCase {
  std::string name;
  LieAlgebra ambient;
  Sl2Triple triple;  // ambient coordinates
  GradedDecomposition grading;
  CharacterChi chi;
  SymplecticData symp;
  NilpotentPair pair;
  AdaptedBasis basis;
  std::shared_ptr<const PbwAlgebra> pbw;  // U(g) in the adapted basis order
  SliceGeometry slice;

  bool lagrangian() const { return symp.lagrangian(); }
  std::size_t complement_dim() const { return basis.complement_dim; }
};

ReductionCase make_case(std::string name, const LieAlgebra& g, const Vector& e,
                        const std::vector<Vector>& ell, const CaseOptions& opts = {});

struct QTag;
/// Element of Q_ell = U(g)/I_ell in canonical form: a combination of PBW
/// monomials with no a-factor (full-length exponents, zero on a).
using QElement = LinearCombination<QTag>;

/// Straighten, then replace trailing a-factors by their chi-values.
QElement q_canonical_form(const ReductionCase& c, const UEAElement& u);
/// The monomial representative of a canonical form, read in U(g).
UEAElement q_lift(const QElement& v);
FilteredDegree q_degree(const ReductionCase& c, const QElement& v);
/// Degree-n part as a polynomial on the complement chart.
KazhdanPolynomial q_symbol(const ReductionCase& c, const QElement& v, int n);

/// Complement monomials of degree <= n, ordered by degree descending, then
/// lexicographically descending.
struct QDegreeBasis {
  int n = 0;
  std::vector<Exponents> monomials;
  std::vector<int> degrees;
  std::map<Exponents, std::size_t> index;

  std::size_t size() const { return monomials.size(); }
  /// Throws InvalidInput if v has a term outside the basis.
  Vector coordinates(const QElement& v) const;
  QElement element(const Vector& coords) const;
};

QDegreeBasis q_degree_basis(const ReductionCase& c, int n);

/// Matrix of v -> q(x v~ - v~ x) on the basis, for the adapted basis vector
/// b_x of n_ell. Every image has strictly lower degree (InternalError
/// otherwise).
SparseMatrix ad_action_matrix(const ReductionCase& c, std::size_t x, const QDegreeBasis& basis);

struct HElement {
  QElement value;
  int degree = 0;
  Exponents pivot;  // leading monomial; coefficient 1
};

/// Basis of F_{n_max} H_ell. Elements sorted by degree, so the first
/// filtered_dim(n) of them form a basis of F_n H.
struct HBasis {
  int n_max = 0;
  std::vector<HElement> elements;
  std::vector<std::size_t> gr_dims;  // gr_n H for n = 0 .. n_max

  std::size_t filtered_dim(int n) const;
  /// Coordinates in `elements`, or none if v is not in F_{n_max} H.
  std::optional<Vector> coordinates(const QElement& v) const;
  QElement element(const Vector& coords) const;
};

/// Joint kernel of the ad n_ell action on F_{n_max} Q. With threads > 1 the
/// per-generator matrices are assembled concurrently.
HBasis h_basis(const ReductionCase& c, int n_max, std::size_t threads = 1);

/// q(a~ b~); DegreeOverflow beyond H.n_max, InternalError if the product
/// leaves H.
QElement h_multiply(const ReductionCase& c, const HBasis& H, const QElement& a,
                    const QElement& b);

/// nu(gr_n a): the degree-n part of a restricted to the slice.
KazhdanPolynomial nu_map(const ReductionCase& c, const QElement& a, int n);

std::string format_q(const ReductionCase& c, const QElement& v);

}  // namespace walg
