#include "walg/nilpotent.hpp"

#include <numeric>

#include "walg/errors.hpp"

namespace walg {

namespace {

bool is_nilpotent_matrix(DenseMatrix m) {
  const std::size_t d = m.size();
  for (std::size_t p = 1; p < d; p *= 2) m = multiply(m, m);
  for (const auto& row : m)
    if (!is_zero(row)) return false;
  return true;
}

SparseMatrix shifted(const SparseMatrix& m, const Rational& s) {
  SparseMatrix r = m;
  for (std::size_t i = 0; i < r.rows(); ++i) r.add(i, i, s);
  return r;
}

}  // namespace

bool is_sl2_triple(const LieAlgebra& g, const Sl2Triple& t) {
  return g.bracket(t.h, t.e) == Rational(2) * t.e &&
         g.bracket(t.h, t.f) == Rational(-2) * t.f && g.bracket(t.e, t.f) == t.h;
}

Sl2Triple complete_sl2_triple(const LieAlgebra& g, const Vector& e) {
  const std::size_t d = g.dim();
  if (e.size() != d) throw DimensionMismatch("complete_sl2_triple: length of e");
  if (is_zero(e)) throw InvalidInput("the nilpotent element must be nonzero");
  const SparseMatrix ad_e = g.ad(e);
  if (!is_nilpotent_matrix(ad_e.to_dense()))
    throw NotNilpotent("ad e is not nilpotent");

  // Column order for the h-system: non-nilpotent basis elements first, so
  // that free coordinates (set to zero) fall on nilpotent directions.
  std::vector<std::size_t> order, nilpotent_dirs;
  for (std::size_t i = 0; i < d; ++i) {
    if (is_nilpotent_matrix(g.ad(g.basis_vector(i)).to_dense())) nilpotent_dirs.push_back(i);
    else order.push_back(i);
  }
  order.insert(order.end(), nilpotent_dirs.begin(), nilpotent_dirs.end());

  // [e, h] = -2e and h in Im ad e, i.e. kappa(c, h) = 0 for c in Ker ad e.
  const Subspace centralizer = kernel(ad_e);
  SparseMatrix sys(0, d);
  Vector rhs;
  for (std::size_t r = 0; r < d; ++r) {
    SparseRow row;
    for (std::size_t p = 0; p < d; ++p) {
      const Rational v = ad_e.at(r, order[p]);
      if (v != 0) row.emplace(p, v);
    }
    sys.append_row(std::move(row));
    rhs.push_back(-2 * e[r]);
  }
  for (const auto& c : centralizer.basis()) {
    const Vector kc = walg::apply(g.killing(), c);
    SparseRow row;
    for (std::size_t p = 0; p < d; ++p)
      if (kc[order[p]] != 0) row.emplace(p, kc[order[p]]);
    sys.append_row(std::move(row));
    rhs.push_back(0);
  }
  const auto hx = solve(sys, rhs);
  if (!hx) throw NoTripleFound("no h in Im ad e with [h,e] = 2e");
  Vector h(d);
  for (std::size_t p = 0; p < d; ++p) h[order[p]] = (*hx)[p];

  SparseMatrix fsys = ad_e;
  fsys.append_rows(shifted(g.ad(h), 2));
  Vector frhs = h;
  frhs.resize(2 * d);
  const auto f = solve(fsys, frhs);
  if (!f) throw NoTripleFound("no f with [e,f] = h and [h,f] = -2f");

  Sl2Triple t{e, h, *f};
  if (!is_sl2_triple(g, t)) throw InternalError("triple relations fail");
  return t;
}

Subspace GradedDecomposition::piece(int i) const {
  auto it = pieces.find(i);
  if (it != pieces.end()) return it->second;
  const std::size_t n = pieces.empty() ? 0 : pieces.begin()->second.ambient_dim();
  return Subspace(n);
}

std::size_t GradedDecomposition::dim(int i) const {
  auto it = pieces.find(i);
  return it == pieces.end() ? 0 : it->second.dim();
}

std::optional<int> GradedDecomposition::weight_of(const Vector& v) const {
  if (is_zero(v)) return std::nullopt;
  for (const auto& [w, s] : pieces)
    if (s.contains(v)) return w;
  return std::nullopt;
}

Subspace GradedDecomposition::range(int lo, int hi) const {
  const std::size_t n = pieces.begin()->second.ambient_dim();
  std::vector<Vector> gens;
  for (const auto& [w, s] : pieces)
    if (w >= lo && w <= hi) gens.insert(gens.end(), s.basis().begin(), s.basis().end());
  return Subspace::span(n, gens);
}

GradedDecomposition ad_h_grading(const LieAlgebra& g, const Sl2Triple& t) {
  const std::size_t d = g.dim();
  const SparseMatrix ad_h = g.ad(t.h);
  GradedDecomposition out;
  std::size_t total = 0;
  const int bound = static_cast<int>(d);
  for (int w = bound; w >= -bound; --w) {
    Subspace s = kernel(shifted(ad_h, -w));
    if (s.dim() == 0) continue;
    total += s.dim();
    out.pieces.emplace(w, std::move(s));
  }
  if (total != d)
    throw NonIntegerEigenvalue("ad h is not diagonalizable with integer eigenvalues");
  return out;
}

CharacterChi chi(const LieAlgebra& g, const Sl2Triple& t) {
  const Rational kef = g.killing(t.e, t.f);
  if (kef == 0) throw InternalError("kappa(e, f) vanishes");
  CharacterChi c;
  c.kappa_ef = kef;
  c.covector = (Rational(1) / kef) * walg::apply(g.killing(), t.e);
  return c;
}

Rational omega(const LieAlgebra& g, const CharacterChi& chi, const Vector& x,
               const Vector& y) {
  return chi(g.bracket(x, y));
}

SymplecticData symplectic_data(const LieAlgebra& g, const GradedDecomposition& grading,
                               const CharacterChi& c,
                               const std::vector<Vector>& ell_spec) {
  const std::size_t d = g.dim();
  SymplecticData s;
  const Subspace gm1 = grading.piece(-1);
  s.gm1_basis = gm1.basis();
  const std::size_t m = s.gm1_basis.size();
  s.omega = zero_matrix(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      s.omega[i][j] = omega(g, c, s.gm1_basis[i], s.gm1_basis[j]);
  if (rank(SparseMatrix::from_dense(s.omega, m)) != m)
    throw DegenerateOmega("omega is degenerate on g(-1)");

  for (const auto& v : ell_spec) {
    if (v.size() != d) throw DimensionMismatch("ell vector length");
    if (!gm1.contains(v)) throw NotInsideGm1("ell vector " + format_vector(g, v) + " is not in g(-1)");
  }
  s.ell = Subspace::span(d, ell_spec);
  for (const auto& u : s.ell.basis())
    for (const auto& v : s.ell.basis())
      if (omega(g, c, u, v) != 0)
        throw NotIsotropic("omega(" + format_vector(g, u) + ", " + format_vector(g, v) + ") != 0");

  SparseMatrix pairing(0, m);
  for (const auto& u : s.ell.basis()) {
    SparseRow row;
    for (std::size_t j = 0; j < m; ++j) {
      const Rational w = omega(g, c, u, s.gm1_basis[j]);
      if (w != 0) row.emplace(j, w);
    }
    pairing.append_row(std::move(row));
  }
  std::vector<Vector> perp;
  const Subspace perp_coeffs = kernel(pairing);
  for (const auto& coeffs : perp_coeffs.basis()) {
    Vector y(d);
    for (std::size_t j = 0; j < m; ++j) axpy(y, coeffs[j], s.gm1_basis[j]);
    perp.push_back(std::move(y));
  }
  s.ell_perp = Subspace::span(d, perp);
  if (s.ell.dim() + s.ell_perp.dim() != m || !s.ell_perp.contains(s.ell))
    throw InternalError("ell^perp has the wrong dimension");
  return s;
}

namespace {

void require_closed(const LieAlgebra& g, const Subspace& s, const char* name) {
  for (const auto& x : s.basis())
    for (const auto& y : s.basis())
      if (!s.contains(g.bracket(x, y)))
        throw InternalError(std::string(name) + " is not closed under the bracket");
}

}  // namespace

NilpotentPair make_nilpotent_pair(const LieAlgebra& g, const GradedDecomposition& grading,
                                  const CharacterChi& c, const SymplecticData& symp) {
  const std::size_t d = g.dim();
  const Subspace low = grading.range(grading.min_weight(), -2);
  auto join = [&](const Subspace& extra) {
    std::vector<Vector> gens = extra.basis();
    gens.insert(gens.end(), low.basis().begin(), low.basis().end());
    return Subspace::span(d, gens);
  };
  NilpotentPair p{join(symp.ell), join(symp.ell_perp)};
  require_closed(g, p.a, "a");
  require_closed(g, p.n_ell, "n_ell");
  if (!p.n_ell.contains(p.a)) throw InternalError("a is not contained in n_ell");
  for (const auto& x : p.a.basis())
    for (const auto& n : p.n_ell.basis())
      if (c(g.bracket(x, n)) != 0) throw InternalError("chi([a, n_ell]) != 0");
  return p;
}

Subspace ker_ad_f(const LieAlgebra& g, const Sl2Triple& t) { return kernel(g.ad(t.f)); }

Subspace killing_annihilator(const LieAlgebra& g, const Subspace& s) {
  SparseMatrix rows(0, g.dim());
  for (const auto& b : s.basis()) {
    const Vector kb = walg::apply(g.killing(), b);
    SparseRow row;
    for (std::size_t i = 0; i < kb.size(); ++i)
      if (kb[i] != 0) row.emplace(i, kb[i]);
    rows.append_row(std::move(row));
  }
  return kernel(rows);
}

DecompositionReport decomposition_check(const LieAlgebra& g, const Sl2Triple& t,
                                        const GradedDecomposition& grading,
                                        const NilpotentPair& pair) {
  DecompositionReport r;
  const Subspace a_perp = killing_annihilator(g, pair.a);
  std::vector<Vector> images;
  for (const auto& x : pair.n_ell.basis()) images.push_back(g.bracket(x, t.e));
  const Subspace n_e = Subspace::span(g.dim(), images);
  const Subspace kf = ker_ad_f(g, t);
  r.a_perp_dim = a_perp.dim();
  r.n_e_dim = n_e.dim();
  r.ker_f_dim = kf.dim();
  r.n_ell_dim = pair.n_ell.dim();
  r.g0_dim = grading.dim(0);
  r.gm1_dim = grading.dim(-1);

  if (n_e.dim() != pair.n_ell.dim())
    throw DecompositionFailure("dim [n_ell, e] (injectivity of x -> [x,e])",
                               pair.n_ell.dim(), n_e.dim());
  auto [sum, meet] = sum_and_intersection(n_e, kf);
  r.intersection_dim = meet.dim();
  if (meet.dim() != 0)
    throw DecompositionFailure("dim([n_ell, e] ∩ Ker ad f)", 0, meet.dim());
  const std::size_t expected = r.n_ell_dim + r.g0_dim + r.gm1_dim;
  if (a_perp.dim() != expected)
    throw DecompositionFailure("dim a^perp vs dim n_ell + dim g(0) + dim g(-1)",
                               expected, a_perp.dim());
  if (!(sum == a_perp))
    throw DecompositionFailure("dim([n_ell, e] + Ker ad f) inside a^perp", a_perp.dim(),
                               a_perp.contains(sum) ? sum.dim() : 0);
  return r;
}

}  // namespace walg
