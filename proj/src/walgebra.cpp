#include "walg/walgebra.hpp"

#include <map>

#include "walg/errors.hpp"

namespace walg {

namespace {

// Coefficient rows of polynomials over the union of their monomials.
std::size_t polynomial_rank(const std::vector<KazhdanPolynomial>& polys) {
  std::map<Exponents, std::size_t> cols;
  for (const auto& p : polys)
    for (const auto& [e, c] : p.terms().terms()) cols.try_emplace(e, cols.size());
  SparseMatrix m(0, cols.size());
  for (const auto& p : polys) {
    SparseRow row;
    for (const auto& [e, c] : p.terms().terms()) row.emplace(cols.at(e), c);
    m.append_row(std::move(row));
  }
  return rank(m);
}

}  // namespace

TheoremReport verify_theorem(const ReductionCase& c, const HBasis& H, int n_max) {
  if (n_max > H.n_max) throw DegreeOverflow("theorem check beyond the computed range", n_max);
  TheoremReport r;
  r.slice_dims = slice_hilbert_series(c.slice, n_max);
  for (int n = 0; n <= n_max; ++n) {
    const std::size_t hd = H.gr_dims[n];
    r.h_dims.push_back(hd);
    std::vector<KazhdanPolynomial> images;
    for (const auto& el : H.elements)
      if (el.degree == n) images.push_back(nu_map(c, el.value, n));
    const std::size_t rk = polynomial_rank(images);
    r.nu_ranks.push_back(rk);
    if (hd != r.slice_dims[n])
      throw TheoremFailure("dim gr H = " + std::to_string(hd) + " but dim C[S] = " +
                               std::to_string(r.slice_dims[n]),
                           n);
    if (rk != hd) throw TheoremFailure("nu is not injective on gr H", n);
  }
  return r;
}

AlgebraClauseReport algebra_clause(const ReductionCase& c, const HBasis& H) {
  AlgebraClauseReport r;
  const auto& els = H.elements;
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i; j < els.size(); ++j) {
      const int n = els[i].degree + els[j].degree;
      if (n > H.n_max) continue;
      const QElement p = h_multiply(c, H, els[i].value, els[j].value);
      const auto lhs = nu_map(c, p, n);
      const auto rhs = nu_map(c, els[i].value, els[i].degree) * nu_map(c, els[j].value, els[j].degree);
      PairCheck pc{i, j, n, lhs == rhs};
      r.passed = r.passed && pc.ok;
      r.pairs.push_back(pc);
    }
  return r;
}

namespace {

KazhdanPolynomial commutator_side(const ReductionCase& c, const HBasis& H, const HElement& a,
                                  const HElement& b) {
  const int n = a.degree + b.degree - 2;
  if (n > H.n_max) throw DegreeOverflow("commutator beyond the computed range", n);
  const QElement comm =
      q_canonical_form(c, c.pbw->commutator(q_lift(a.value), q_lift(b.value)));
  if (!q_degree(c, comm).at_most(n)) throw InternalError("commutator raises the degree");
  if (!H.coordinates(comm)) throw InternalError("commutator of H elements left H");
  return nu_map(c, comm, n);
}

}  // namespace

bool gr_commutator_vs_poisson(const ReductionCase& c, const HBasis& H, const HElement& a,
                              const HElement& b) {
  const auto lhs = commutator_side(c, H, a, b);
  const auto rhs = slice_poisson_bracket(c.slice, nu_map(c, a.value, a.degree),
                                         nu_map(c, b.value, b.degree));
  return lhs == rhs;
}

PoissonClauseReport poisson_clause(const ReductionCase& c, const HBasis& H) {
  if (!c.lagrangian()) throw InvalidInput("the slice bracket needs a Lagrangian ell");
  PoissonClauseReport r;
  const auto& els = H.elements;
  std::vector<KazhdanPolynomial> nus, lifts;
  for (const auto& el : els) {
    nus.push_back(nu_map(c, el.value, el.degree));
    lifts.push_back(invariant_lift(c.slice, nus.back()));
    if (!(q_symbol(c, el.value, el.degree) == lifts.back()))
      throw InternalError("invariant lift of nu(gr a) differs from gr a");
  }
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i; j < els.size(); ++j) {
      const int n = els[i].degree + els[j].degree - 2;
      if (n > H.n_max) continue;
      const auto lhs = commutator_side(c, H, els[i], els[j]);
      const auto rhs = bracket_of_lifts(c.slice, lifts[i], lifts[j], Extension::plain);
      const auto rhs2 = bracket_of_lifts(c.slice, lifts[i], lifts[j], Extension::shifted);
      PairCheck pc{i, j, n, lhs == rhs};
      r.extension_independent = r.extension_independent && rhs == rhs2;
      r.passed = r.passed && pc.ok;
      r.pairs.push_back(pc);
      if (!rhs.is_zero())
        r.brackets.emplace_back("{" + nus[i].to_string() + ", " + nus[j].to_string() + "}",
                                rhs.to_string());
    }
  r.passed = r.passed && r.extension_independent;
  return r;
}

QElement transport(const ReductionCase& from, const ReductionCase& to, const QElement& v) {
  const std::size_t d = from.basis.dim();
  std::vector<Vector> images;
  for (std::size_t i = 0; i < d; ++i) images.push_back(to.basis.to_adapted(from.basis.vectors[i]));
  const PbwAlgebra& U = *to.pbw;
  UEAElement total;
  for (const auto& [m, coeff] : v.terms()) {
    UEAElement acc = U.one();
    for (std::size_t i = d; i-- > 0;)
      for (std::uint16_t r = 0; r < m[i]; ++r) {
        UEAElement next;
        for (std::size_t k = 0; k < d; ++k)
          if (images[i][k] != 0) next.add_scaled(U.left_multiply(k, acc), images[i][k]);
        acc = std::move(next);
      }
    total.add_scaled(acc, coeff);
  }
  return q_canonical_form(to, total);
}

namespace {

std::size_t block_rank(const DenseMatrix& m, std::size_t rows, std::size_t cols) {
  SparseMatrix s(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (m[r][c] != 0) s.set(r, c, m[r][c]);
  return rank(s);
}

bool filtered_bijection(const DenseMatrix& m, const HBasis& src, const HBasis& dst, int n_max,
                        std::vector<std::size_t>* ranks, int* failing) {
  for (int n = 0; n <= n_max; ++n) {
    const std::size_t fs = src.filtered_dim(n), fd = dst.filtered_dim(n);
    for (std::size_t j = 0; j < fs; ++j)
      for (std::size_t r = fd; r < m.size(); ++r)
        if (m[r][j] != 0) {
          if (failing) *failing = n;
          return false;
        }
    const std::size_t rk = block_rank(m, fd, fs);
    if (ranks) ranks->push_back(rk);
    if (rk != fs || fs != fd) {
      if (failing) *failing = n;
      return false;
    }
  }
  return true;
}

}  // namespace

ComparisonReport ell_comparison(const ReductionCase& from, const HBasis& H_from,
                                const ReductionCase& to, const HBasis& H_to, int n_max) {
  if (from.basis.dim() != to.basis.dim() || from.triple.e != to.triple.e ||
      from.triple.h != to.triple.h || from.triple.f != to.triple.f)
    throw InvalidInput("ell_comparison needs the same algebra and triple");
  if (!to.symp.ell.contains(from.symp.ell))
    throw InvalidInput("ell_comparison needs ell1 inside ell2");
  if (n_max > H_from.n_max || n_max > H_to.n_max)
    throw DegreeOverflow("comparison beyond the computed range", n_max);

  ComparisonReport r;
  r.dims_from.assign(H_from.gr_dims.begin(), H_from.gr_dims.begin() + n_max + 1);
  r.dims_to.assign(H_to.gr_dims.begin(), H_to.gr_dims.begin() + n_max + 1);
  const std::size_t cols = H_from.filtered_dim(n_max);
  const std::size_t rows = H_to.filtered_dim(n_max);
  r.map = zero_matrix(rows, cols);
  std::vector<QElement> images;
  for (std::size_t j = 0; j < cols; ++j) {
    const auto& el = H_from.elements[j];
    images.push_back(transport(from, to, el.value));
    const auto coords = H_to.coordinates(images.back());
    if (!coords) throw ComparisonFailure("image of an H element is not in H", el.degree);
    for (std::size_t i = 0; i < rows; ++i) r.map[i][j] = (*coords)[i];
  }
  int failing = -1;
  if (!filtered_bijection(r.map, H_from, H_to, n_max, &r.ranks, &failing))
    throw ComparisonFailure("natural map is not a filtered bijection", failing);

  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const int n = H_from.elements[i].degree + H_from.elements[j].degree;
      if (n > n_max) continue;
      const QElement lhs =
          transport(from, to, h_multiply(from, H_from, H_from.elements[i].value,
                                         H_from.elements[j].value));
      const QElement rhs = h_multiply(to, H_to, images[i], images[j]);
      ++r.pairs_checked;
      if (!(lhs == rhs)) {
        r.multiplicative = false;
        throw ComparisonFailure("natural map does not respect products", n);
      }
    }
  return r;
}

bool composite_is_filtered_isomorphism(const ComparisonReport& r1, const ComparisonReport& r2,
                                       const HBasis& H1, const HBasis& H2, int n_max) {
  if (r1.map.size() != r1.map.at(0).size() || r2.map.size() != r1.map.size()) return false;
  const DenseMatrix comp = multiply(r2.map, inverse(r1.map));
  return filtered_bijection(comp, H1, H2, n_max, nullptr, nullptr);
}

WhittakerReport whittaker_vectors(const ReductionCase& c, const HBasis& H, int n) {
  if (!c.lagrangian()) throw InvalidInput("Whittaker vectors are compared in the Lagrangian case");
  if (n > H.n_max) throw DegreeOverflow("Whittaker check beyond the computed range", n);
  const QDegreeBasis qb = q_degree_basis(c, n);
  const PbwAlgebra& U = *c.pbw;
  SparseMatrix m(0, qb.size());
  for (std::size_t x = c.complement_dim(); x < c.basis.dim(); ++x) {
    SparseMatrix block(qb.size(), qb.size());
    for (std::size_t j = 0; j < qb.size(); ++j) {
      const QElement img = q_canonical_form(c, U.left_multiply(x, U.monomial(qb.monomials[j])));
      const Vector coords = qb.coordinates(img);
      for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) block.add(i, j, coords[i]);
      block.add(j, j, -c.basis.chi_values[x]);
    }
    m.append_rows(block);
  }
  WhittakerReport r;
  r.whittaker = kernel(m);
  std::vector<Vector> hv;
  for (std::size_t i = 0; i < H.filtered_dim(n); ++i) hv.push_back(qb.coordinates(H.elements[i].value));
  r.h = Subspace::span(qb.size(), hv);
  r.equal = r.whittaker == r.h;
  return r;
}

CenterReport center_injects(const ReductionCase& c) {
  const PbwAlgebra& U = *c.pbw;
  const UEAElement omega = casimir(U);
  CenterReport r;
  r.image = q_canonical_form(c, omega);
  const auto deg = q_degree(c, r.image);
  if (deg.is_bottom()) throw CenterCheckFailure("Casimir image vanishes in Q");
  r.degree = deg.value();
  r.invariant = true;
  const UEAElement lifted = q_lift(r.image);
  for (auto x : c.basis.n_ell_indices)
    if (!q_canonical_form(c, U.commutator(U.generator(x), lifted)).is_zero()) r.invariant = false;
  r.nonconstant = r.degree > 0;
  r.nu = nu_map(c, r.image, r.degree);
  if (!r.invariant) throw CenterCheckFailure("Casimir image is not ad n_ell-invariant");
  if (!r.nonconstant) throw CenterCheckFailure("Casimir image is constant");
  if (r.nu.is_zero()) throw CenterCheckFailure("Casimir image has zero nu-image");
  return r;
}

}  // namespace walg
