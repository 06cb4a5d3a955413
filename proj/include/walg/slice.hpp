#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "walg/adapted_basis.hpp"
#include "walg/polynomial.hpp"

namespace walg {

/// Coordinate rings attached to a reduction case, all on the adapted basis:
///   full        C[g*], one variable per adapted basis vector;
///   complement  C[chi + a^perp], the leading complement_dim variables;
///   slice       C[S], one variable t_j per Ker ad f basis vector z_j
///               with degree 2 - weight(z_j).
struct SliceGeometry {
  std::shared_ptr<const LieAlgebra> algebra;  // adapted basis
  std::size_t complement_dim = 0;
  std::vector<std::size_t> n_ell_indices;
  bool lagrangian = false;
  Vector chi_values;
  DenseMatrix pairing;  // pairing[j][k] = kappa(z_j, b_k) / kappa(e, f)
  ChartPtr full, complement, slice;

  std::size_t dim() const { return chi_values.size(); }
};

SliceGeometry make_slice_geometry(const AdaptedBasis& basis, bool lagrangian);

/// Lie-Poisson bracket on the full chart of g (structure constants of g).
KazhdanPolynomial lie_poisson_bracket(const LieAlgebra& g, const KazhdanPolynomial& f1,
                                      const KazhdanPolynomial& f2);

/// Substitutes a-coordinates by their chi-values.
KazhdanPolynomial restrict_to_chi_plus_a_perp(const SliceGeometry& s,
                                              const KazhdanPolynomial& f);
/// Reads a complement polynomial on the full chart (a-coordinates absent).
KazhdanPolynomial extend_to_full(const SliceGeometry& s, const KazhdanPolynomial& g);
/// Restriction along t -> Phi(e + sum t_j z_j); complement chart input.
KazhdanPolynomial restrict_to_slice(const SliceGeometry& s, const KazhdanPolynomial& g);
/// Same, from the full chart.
KazhdanPolynomial restrict_full_to_slice(const SliceGeometry& s, const KazhdanPolynomial& f);

/// Infinitesimal coadjoint action of the adapted basis vector b_x (x an
/// n_ell index) on C[chi + a^perp]: restrict({y_x, G~}) for any extension G~.
KazhdanPolynomial infinitesimal_action(const SliceGeometry& s, std::size_t x,
                                       const KazhdanPolynomial& g);

std::vector<std::size_t> slice_hilbert_series(const SliceGeometry& s, int n_max);

struct CoadjointFlow {
  Vector generator;            // adapted coordinates, inside n_ell
  DenseMatrix matrix;          // A = -(ad x)^T acting on coordinates xi_k = xi(b_k)
  std::vector<DenseMatrix> terms;  // A^j / j!, j = 0 .. nilpotency index - 1

  /// exp(tA) as an exact matrix.
  DenseMatrix at(const Rational& t) const;
};

/// Throws InvalidInput if x is not in n_ell, NotNilpotentCoadjoint if A is
/// not nilpotent, InternalError if chi + a^perp is not preserved.
CoadjointFlow coadjoint_flow(const SliceGeometry& s, const Vector& x);

/// G(exp(u A) xi) for xi in chi + a^perp, as a polynomial in the complement
/// coordinates and an extra parameter u (the last variable of the result).
KazhdanPolynomial flow_pullback(const SliceGeometry& s, const CoadjointFlow& flow,
                                const KazhdanPolynomial& g);

/// The M-invariant polynomial on chi + m^perp restricting to f on S
/// (Lagrangian case), solved degree by degree. Throws LiftFailure when the
/// solution is missing or not unique.
KazhdanPolynomial invariant_lift(const SliceGeometry& s, const KazhdanPolynomial& f);

enum class Extension { plain, shifted };

/// The reduced bracket on C[S]: lift, extend to g*, take the Lie-Poisson
/// bracket, restrict. `shifted` adds (y_k - chi_k) multiples for the a-part,
/// a second extension that must give the same answer.
KazhdanPolynomial slice_poisson_bracket(const SliceGeometry& s, const KazhdanPolynomial& f1,
                                        const KazhdanPolynomial& f2,
                                        Extension ext = Extension::plain);

/// The bracket step alone, for precomputed lifts on the complement chart.
KazhdanPolynomial bracket_of_lifts(const SliceGeometry& s, const KazhdanPolynomial& lift1,
                                   const KazhdanPolynomial& lift2,
                                   Extension ext = Extension::plain);

struct TransversalityReport {
  std::vector<Vector> points;            // ambient points e + sum r_j z_j
  std::vector<std::size_t> intersection_dims;
  std::vector<std::size_t> sum_dims;
  bool passed = false;
};

/// [X, [f, g]] ∩ Ker ad f = 0 and [X, [f, g]] + Ker ad f = g at `count`
/// pseudo-random rational points of the slice.
TransversalityReport transversality(const LieAlgebra& g, const Sl2Triple& t,
                                    const std::vector<Vector>& slice_basis,
                                    std::uint64_t seed, std::size_t count = 3);

}  // namespace walg
