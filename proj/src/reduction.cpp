#include "walg/reduction.hpp"

#include <algorithm>
#include <future>

#include "walg/errors.hpp"

namespace walg {

ReductionCase make_case(std::string name, const LieAlgebra& g, const Vector& e,
                        const std::vector<Vector>& ell, const CaseOptions& opts) {
  ReductionCase c;
  c.name = std::move(name);
  c.ambient = g;
  c.triple = complete_sl2_triple(g, e);
  c.grading = ad_h_grading(g, c.triple);
  c.chi = chi(g, c.triple);
  c.symp = symplectic_data(g, c.grading, c.chi, ell);
  c.pair = make_nilpotent_pair(g, c.grading, c.chi, c.symp);
  c.basis = adapted_basis(g, c.triple, c.grading, c.chi, c.symp, c.pair);
  c.pbw = std::make_shared<const PbwAlgebra>(c.basis.algebra, c.basis.weights, opts.memoize);
  c.slice = make_slice_geometry(c.basis, c.symp.lagrangian());
  return c;
}

QElement q_canonical_form(const ReductionCase& c, const UEAElement& u) {
  const std::size_t cd = c.complement_dim();
  QElement out;
  for (const auto& [m, coeff] : u.terms()) {
    Rational v = coeff;
    for (std::size_t k = cd; k < m.size() && v != 0; ++k)
      for (std::uint16_t r = 0; r < m[k]; ++r) v *= c.basis.chi_values[k];
    if (v == 0) continue;
    Exponents e = m;
    std::fill(e.begin() + static_cast<long>(cd), e.end(), 0);
    out.add_term(e, v);
  }
  return out;
}

UEAElement q_lift(const QElement& v) {
  UEAElement u;
  for (const auto& [m, coeff] : v.terms()) u.add_term(m, coeff);
  return u;
}

FilteredDegree q_degree(const ReductionCase& c, const QElement& v) {
  return c.pbw->kazhdan_degree(q_lift(v));
}

KazhdanPolynomial q_symbol(const ReductionCase& c, const QElement& v, int n) {
  const std::size_t cd = c.complement_dim();
  PolyTerms t;
  for (const auto& [m, coeff] : v.terms())
    if (c.pbw->monomial_degree(m) == n)
      t.add_term(Exponents(m.begin(), m.begin() + static_cast<long>(cd)), coeff);
  return {c.slice.complement, std::move(t)};
}

Vector QDegreeBasis::coordinates(const QElement& v) const {
  Vector out(size());
  for (const auto& [m, coeff] : v.terms()) {
    auto it = index.find(m);
    if (it == index.end()) throw InvalidInput("element outside F_" + std::to_string(n) + "Q");
    out[it->second] = coeff;
  }
  return out;
}

QElement QDegreeBasis::element(const Vector& coords) const {
  QElement v;
  for (std::size_t i = 0; i < coords.size(); ++i) v.add_term(monomials[i], coords[i]);
  return v;
}

QDegreeBasis q_degree_basis(const ReductionCase& c, int n) {
  QDegreeBasis b;
  b.n = n;
  const auto degrees = c.slice.complement->degrees();
  for (int m = n; m >= 0; --m)
    for (auto e : monomials_of_degree(degrees, m)) {
      e.resize(c.basis.dim(), 0);
      b.index.emplace(e, b.monomials.size());
      b.monomials.push_back(std::move(e));
      b.degrees.push_back(m);
    }
  return b;
}

SparseMatrix ad_action_matrix(const ReductionCase& c, std::size_t x, const QDegreeBasis& basis) {
  const PbwAlgebra& U = *c.pbw;
  const UEAElement gx = U.generator(x);
  SparseMatrix m(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const UEAElement v = U.monomial(basis.monomials[j]);
    const QElement img = q_canonical_form(c, U.left_multiply(x, v) - U.multiply(v, gx));
    for (const auto& [mono, coeff] : img.terms()) {
      auto it = basis.index.find(mono);
      if (it == basis.index.end() || basis.degrees[it->second] >= basis.degrees[j])
        throw InternalError("ad action does not lower the Kazhdan degree");
      m.set(it->second, j, coeff);
    }
  }
  return m;
}

std::size_t HBasis::filtered_dim(int n) const {
  std::size_t k = 0;
  while (k < elements.size() && elements[k].degree <= n) ++k;
  return k;
}

std::optional<Vector> HBasis::coordinates(const QElement& v) const {
  Vector coords(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) coords[i] = v.coefficient(elements[i].pivot);
  if (!(element(coords) == v)) return std::nullopt;
  return coords;
}

QElement HBasis::element(const Vector& coords) const {
  QElement v;
  for (std::size_t i = 0; i < coords.size(); ++i) v.add_scaled(elements[i].value, coords[i]);
  return v;
}

HBasis h_basis(const ReductionCase& c, int n_max, std::size_t threads) {
  const QDegreeBasis qb = q_degree_basis(c, n_max);
  const auto& gens = c.basis.n_ell_indices;
  std::vector<SparseMatrix> blocks(gens.size());
  if (threads > 1 && gens.size() > 1) {
    std::vector<std::future<SparseMatrix>> jobs;
    for (std::size_t i = 0; i < gens.size(); ++i)
      jobs.push_back(std::async(std::launch::async,
                                [&, i] { return ad_action_matrix(c, gens[i], qb); }));
    for (std::size_t i = 0; i < gens.size(); ++i) blocks[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < gens.size(); ++i) blocks[i] = ad_action_matrix(c, gens[i], qb);
  }
  SparseMatrix stacked(0, qb.size());
  for (const auto& b : blocks) stacked.append_rows(b);
  const Subspace ker = kernel(stacked);

  HBasis h;
  h.n_max = n_max;
  h.gr_dims.assign(static_cast<std::size_t>(n_max) + 1, 0);
  for (std::size_t r = ker.dim(); r-- > 0;) {
    HElement el;
    el.value = qb.element(ker.basis()[r]);
    el.pivot = qb.monomials[ker.pivots()[r]];
    el.degree = qb.degrees[ker.pivots()[r]];
    ++h.gr_dims[el.degree];
    h.elements.push_back(std::move(el));
  }
  std::stable_sort(h.elements.begin(), h.elements.end(),
                   [](const HElement& a, const HElement& b) { return a.degree < b.degree; });
  return h;
}

QElement h_multiply(const ReductionCase& c, const HBasis& H, const QElement& a,
                    const QElement& b) {
  const auto da = q_degree(c, a), db = q_degree(c, b);
  if (da.is_bottom() || db.is_bottom()) return {};
  const int n = da.value() + db.value();
  if (n > H.n_max) throw DegreeOverflow("product beyond the computed range", n);
  QElement p = q_canonical_form(c, c.pbw->multiply(q_lift(a), q_lift(b)));
  if (!H.coordinates(p)) throw InternalError("product of H elements left H");
  return p;
}

KazhdanPolynomial nu_map(const ReductionCase& c, const QElement& a, int n) {
  return restrict_to_slice(c.slice, q_symbol(c, a, n));
}

std::string format_q(const ReductionCase& c, const QElement& v) {
  return format_element(*c.pbw, q_lift(v));
}

}  // namespace walg
