#include "walg/adapted_basis.hpp"

#include "walg/errors.hpp"

namespace walg {

namespace {

// Appends to `out` those candidates that are independent of `base` and of the
// previously appended ones.
std::vector<Vector> extend(std::size_t n, std::vector<Vector> base,
                           const std::vector<Vector>& candidates) {
  std::vector<Vector> added;
  std::size_t r = Subspace::span(n, base).dim();
  for (const auto& c : candidates) {
    base.push_back(c);
    const std::size_t r2 = Subspace::span(n, base).dim();
    if (r2 > r) {
      added.push_back(c);
      r = r2;
    } else {
      base.pop_back();
    }
  }
  return added;
}

std::string label_for(const LieAlgebra& g, const Vector& v) {
  std::size_t nonzero = 0, where = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) ++nonzero, where = i;
  if (nonzero == 1 && v[where] == 1) return g.label(where);
  return "(" + format_vector(g, v) + ")";
}

}  // namespace

Vector AdaptedBasis::to_adapted(const Vector& ambient) const {
  return walg::apply(to_adapted_matrix, ambient);
}

Vector AdaptedBasis::to_ambient(const Vector& adapted) const {
  Vector out(adapted.size());
  for (std::size_t k = 0; k < adapted.size(); ++k) axpy(out, adapted[k], vectors[k]);
  return out;
}

AdaptedBasis adapted_basis(const LieAlgebra& g, const Sl2Triple& t,
                           const GradedDecomposition& grading, const CharacterChi& chi,
                           const SymplecticData& symp, const NilpotentPair& pair) {
  const std::size_t d = g.dim();
  AdaptedBasis b;
  auto push = [&](const Vector& v, int w) {
    b.vectors.push_back(v);
    b.weights.push_back(w);
    b.labels.push_back(label_for(g, v));
  };

  for (int w = grading.max_weight(); w >= 0; --w)
    for (const auto& v : grading.piece(w).basis()) push(v, w);
  const auto perp_extra = extend(d, symp.ell.basis(), symp.ell_perp.basis());
  std::vector<Vector> in_perp = symp.ell.basis();
  in_perp.insert(in_perp.end(), perp_extra.begin(), perp_extra.end());
  const auto rest = extend(d, in_perp, symp.gm1_basis);
  const std::size_t perp_start = b.vectors.size();
  for (const auto& v : perp_extra) push(v, -1);
  for (const auto& v : rest) push(v, -1);
  b.complement_dim = b.vectors.size();
  for (const auto& v : symp.ell.basis()) push(v, -1);
  for (int w = -2; w >= grading.min_weight(); --w)
    for (const auto& v : grading.piece(w).basis()) push(v, w);

  if (b.vectors.size() != d) throw InternalError("adapted basis has the wrong size");
  if (b.dim() - b.complement_dim != pair.a.dim())
    throw InternalError("adapted basis: a has the wrong dimension");

  for (std::size_t k = 0; k < perp_extra.size(); ++k) b.n_ell_indices.push_back(perp_start + k);
  for (std::size_t k = b.complement_dim; k < d; ++k) b.n_ell_indices.push_back(k);
  if (b.n_ell_indices.size() != pair.n_ell.dim())
    throw InternalError("adapted basis: n_ell has the wrong dimension");

  b.algebra = std::make_shared<const LieAlgebra>(change_basis(g, b.vectors, b.labels));
  auto cols = zero_matrix(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i) cols[i][k] = b.vectors[k][i];
  b.to_adapted_matrix = inverse(cols);

  b.chi_values.resize(d);
  for (std::size_t k = 0; k < d; ++k) b.chi_values[k] = chi(b.vectors[k]);
  b.triple = {b.to_adapted(t.e), b.to_adapted(t.h), b.to_adapted(t.f)};

  const Subspace kf = ker_ad_f(g, t);
  for (int w = 0; w >= grading.min_weight(); --w) {
    auto [sum, meet] = sum_and_intersection(kf, grading.piece(w));
    for (const auto& v : meet.basis()) {
      b.slice_basis.push_back(v);
      b.slice_weights.push_back(w);
    }
  }
  if (b.slice_basis.size() != kf.dim())
    throw InternalError("Ker ad f is not spanned by its graded pieces");
  b.pairing = zero_matrix(b.slice_basis.size(), d);
  for (std::size_t j = 0; j < b.slice_basis.size(); ++j)
    for (std::size_t k = 0; k < d; ++k)
      b.pairing[j][k] = g.killing(b.slice_basis[j], b.vectors[k]) / chi.kappa_ef;
  return b;
}

}  // namespace walg
