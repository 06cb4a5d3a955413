#include "walg/slice.hpp"

#include <map>
#include <random>

#include "walg/errors.hpp"

namespace walg {

SliceGeometry make_slice_geometry(const AdaptedBasis& basis, bool lagrangian) {
  SliceGeometry s;
  s.algebra = basis.algebra;
  s.complement_dim = basis.complement_dim;
  s.n_ell_indices = basis.n_ell_indices;
  s.lagrangian = lagrangian;
  s.chi_values = basis.chi_values;
  s.pairing = basis.pairing;
  s.full = make_kazhdan_chart("g*", basis.labels, basis.weights);
  std::vector<ChartVariable> comp(s.full->vars.begin(),
                                  s.full->vars.begin() + static_cast<long>(s.complement_dim));
  s.complement = make_chart("chi+a^perp", std::move(comp));
  std::vector<ChartVariable> vars;
  const std::size_t r = basis.slice_basis.size();
  for (std::size_t j = 0; j < r; ++j) {
    const int w = basis.slice_weights[j];
    vars.push_back({r == 1 ? std::string("t") : "t" + std::to_string(j + 1), w, 2 - w, j});
  }
  s.slice = make_chart("S", std::move(vars));
  return s;
}

KazhdanPolynomial lie_poisson_bracket(const LieAlgebra& g, const KazhdanPolynomial& f1,
                                      const KazhdanPolynomial& f2) {
  if (!same_chart(f1.chart(), f2.chart()))
    throw ChartMismatch("lie_poisson_bracket: polynomials on different charts");
  const ChartPtr& chart = f1.chart();
  const std::size_t d = g.dim();
  if (chart->size() != d) throw ChartMismatch("lie_poisson_bracket needs the full chart of g");
  std::vector<KazhdanPolynomial> d1, d2;
  for (std::size_t i = 0; i < d; ++i) {
    d1.push_back(f1.derivative(i));
    d2.push_back(f2.derivative(i));
  }
  KazhdanPolynomial out(chart);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const auto& br = g.bracket_basis(i, j);
      if (br.empty()) continue;
      KazhdanPolynomial coeff = d1[i] * d2[j] - d1[j] * d2[i];
      if (coeff.is_zero()) continue;
      KazhdanPolynomial lin(chart);
      for (const auto& [k, c] : br) lin += c * KazhdanPolynomial::variable(chart, k);
      out += coeff * lin;
    }
  return out;
}

KazhdanPolynomial restrict_to_chi_plus_a_perp(const SliceGeometry& s,
                                              const KazhdanPolynomial& f) {
  if (!same_chart(f.chart(), s.full)) throw ChartMismatch("restriction expects the full chart");
  const std::size_t c = s.complement_dim;
  PolyTerms out;
  for (const auto& [e, coeff] : f.terms().terms()) {
    Rational v = coeff;
    for (std::size_t k = c; k < e.size() && v != 0; ++k)
      for (std::uint16_t r = 0; r < e[k]; ++r) v *= s.chi_values[k];
    if (v == 0) continue;
    out.add_term(Exponents(e.begin(), e.begin() + static_cast<long>(c)), v);
  }
  return {s.complement, std::move(out)};
}

KazhdanPolynomial extend_to_full(const SliceGeometry& s, const KazhdanPolynomial& g) {
  if (!same_chart(g.chart(), s.complement))
    throw ChartMismatch("extension expects the complement chart");
  PolyTerms out;
  for (const auto& [e, coeff] : g.terms().terms()) {
    Exponents f = e;
    f.resize(s.dim(), 0);
    out.add_term(f, coeff);
  }
  return {s.full, std::move(out)};
}

namespace {

std::vector<KazhdanPolynomial> slice_images(const SliceGeometry& s, std::size_t count,
                                            bool with_chi) {
  std::vector<KazhdanPolynomial> images;
  for (std::size_t k = 0; k < count; ++k) {
    KazhdanPolynomial im = KazhdanPolynomial::constant(s.slice, with_chi ? s.chi_values[k] : 0);
    for (std::size_t j = 0; j < s.slice->size(); ++j)
      if (s.pairing[j][k] != 0) im += s.pairing[j][k] * KazhdanPolynomial::variable(s.slice, j);
    images.push_back(std::move(im));
  }
  return images;
}

}  // namespace

KazhdanPolynomial restrict_to_slice(const SliceGeometry& s, const KazhdanPolynomial& g) {
  if (!same_chart(g.chart(), s.complement))
    throw ChartMismatch("restrict_to_slice expects the complement chart");
  // chi vanishes on the complement, so only the pairing contributes.
  return g.substitute(s.slice, slice_images(s, s.complement_dim, false));
}

KazhdanPolynomial restrict_full_to_slice(const SliceGeometry& s, const KazhdanPolynomial& f) {
  if (!same_chart(f.chart(), s.full)) throw ChartMismatch("expects the full chart");
  return f.substitute(s.slice, slice_images(s, s.dim(), true));
}

KazhdanPolynomial infinitesimal_action(const SliceGeometry& s, std::size_t x,
                                       const KazhdanPolynomial& g) {
  if (!same_chart(g.chart(), s.complement))
    throw ChartMismatch("infinitesimal_action expects the complement chart");
  const std::size_t c = s.complement_dim;
  KazhdanPolynomial out(s.complement);
  for (std::size_t j = 0; j < c; ++j) {
    const auto& br = s.algebra->bracket_basis(x, j);
    if (br.empty()) continue;
    KazhdanPolynomial dj = g.derivative(j);
    if (dj.is_zero()) continue;
    KazhdanPolynomial lin(s.complement);
    for (const auto& [k, v] : br) {
      if (k < c) lin += v * KazhdanPolynomial::variable(s.complement, k);
      else lin += KazhdanPolynomial::constant(s.complement, v * s.chi_values[k]);
    }
    out += dj * lin;
  }
  return out;
}

std::vector<std::size_t> slice_hilbert_series(const SliceGeometry& s, int n_max) {
  return hilbert_series(s.slice->degrees(), n_max);
}

DenseMatrix CoadjointFlow::at(const Rational& t) const {
  const std::size_t d = matrix.size();
  DenseMatrix out = zero_matrix(d, d);
  Rational tp = 1;
  for (const auto& term : terms) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (term[i][j] != 0) out[i][j] += tp * term[i][j];
    tp *= t;
  }
  return out;
}

CoadjointFlow coadjoint_flow(const SliceGeometry& s, const Vector& x) {
  const std::size_t d = s.dim();
  if (x.size() != d) throw DimensionMismatch("coadjoint_flow: generator length");
  {
    std::vector<bool> in_n(d, false);
    for (auto k : s.n_ell_indices) in_n[k] = true;
    for (std::size_t k = 0; k < d; ++k)
      if (x[k] != 0 && !in_n[k]) throw InvalidInput("coadjoint_flow: generator not in n_ell");
  }
  CoadjointFlow flow;
  flow.generator = x;
  const DenseMatrix ad = s.algebra->ad(x).to_dense();
  flow.matrix = zero_matrix(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t m = 0; m < d; ++m) flow.matrix[k][m] = -ad[m][k];

  DenseMatrix power = identity_matrix(d);
  Rational factorial = 1;
  for (std::size_t j = 0;; ++j) {
    bool zero = true;
    for (const auto& row : power) zero = zero && is_zero(row);
    if (zero) break;
    if (j > d) throw NotNilpotentCoadjoint("coadjoint matrix is not nilpotent");
    if (j > 0) factorial *= static_cast<unsigned long>(j);
    DenseMatrix term = power;
    for (auto& row : term)
      for (auto& v : row) v /= factorial;
    flow.terms.push_back(std::move(term));
    power = multiply(power, flow.matrix);
  }

  // a-rows of A^j (j >= 1) must vanish on a^perp directions and on chi.
  const std::size_t c = s.complement_dim;
  for (std::size_t j = 1; j < flow.terms.size(); ++j)
    for (std::size_t k = c; k < d; ++k) {
      Rational on_chi = 0;
      for (std::size_t m = 0; m < d; ++m) {
        if (m < c && flow.terms[j][k][m] != 0)
          throw InternalError("coadjoint flow leaves chi + a^perp");
        on_chi += flow.terms[j][k][m] * s.chi_values[m];
      }
      if (on_chi != 0) throw InternalError("coadjoint flow moves chi on a");
    }
  return flow;
}

KazhdanPolynomial flow_pullback(const SliceGeometry& s, const CoadjointFlow& flow,
                                const KazhdanPolynomial& g) {
  if (!same_chart(g.chart(), s.complement))
    throw ChartMismatch("flow_pullback expects the complement chart");
  const std::size_t c = s.complement_dim;
  const std::size_t d = s.dim();
  std::vector<ChartVariable> vars = s.complement->vars;
  vars.push_back({"u", 0, 0, d});
  const ChartPtr target = make_chart("chi+a^perp x u", std::move(vars));
  const auto u = KazhdanPolynomial::variable(target, c);
  std::vector<KazhdanPolynomial> xi;
  for (std::size_t m = 0; m < d; ++m)
    xi.push_back(m < c ? KazhdanPolynomial::variable(target, m)
                       : KazhdanPolynomial::constant(target, s.chi_values[m]));
  std::vector<KazhdanPolynomial> images;
  for (std::size_t k = 0; k < c; ++k) {
    KazhdanPolynomial im(target);
    KazhdanPolynomial up = KazhdanPolynomial::constant(target, 1);
    for (const auto& term : flow.terms) {
      KazhdanPolynomial row(target);
      for (std::size_t m = 0; m < d; ++m)
        if (term[k][m] != 0) row += term[k][m] * xi[m];
      im += up * row;
      up = up * u;
    }
    images.push_back(std::move(im));
  }
  return g.substitute(target, images);
}

namespace {

using RowIndex = std::map<Exponents, std::size_t>;

std::size_t row_of(RowIndex& idx, std::size_t& next, const Exponents& e) {
  auto [it, inserted] = idx.try_emplace(e, next);
  if (inserted) ++next;
  return it->second;
}

KazhdanPolynomial lift_homogeneous(const SliceGeometry& s, const KazhdanPolynomial& f, int n) {
  const auto unknowns = monomials_of_degree(s.complement->degrees(), n);
  const std::size_t blocks = s.n_ell_indices.size() + 1;
  std::vector<RowIndex> idx(blocks);
  std::vector<std::size_t> next(blocks, 0);
  // entries[col] = list of (block, row, value)
  struct Entry {
    std::size_t block, row;
    Rational value;
  };
  std::vector<std::vector<Entry>> cols(unknowns.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const auto mono = KazhdanPolynomial::monomial(s.complement, unknowns[u]);
    for (std::size_t b = 0; b + 1 < blocks; ++b) {
      const auto img = infinitesimal_action(s, s.n_ell_indices[b], mono);
      for (const auto& [e, v] : img.terms().terms())
        cols[u].push_back({b, row_of(idx[b], next[b], e), v});
    }
    const auto nu = restrict_to_slice(s, mono);
    for (const auto& [e, v] : nu.terms().terms())
      cols[u].push_back({blocks - 1, row_of(idx[blocks - 1], next[blocks - 1], e), v});
  }
  for (const auto& [e, v] : f.terms().terms()) row_of(idx[blocks - 1], next[blocks - 1], e);

  std::vector<std::size_t> offset(blocks, 0);
  for (std::size_t b = 1; b < blocks; ++b) offset[b] = offset[b - 1] + next[b - 1];
  const std::size_t rows = offset[blocks - 1] + next[blocks - 1];
  SparseMatrix m(rows, unknowns.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    for (const auto& en : cols[u]) m.add(offset[en.block] + en.row, u, en.value);
  Vector rhs(rows);
  for (const auto& [e, v] : f.terms().terms())
    rhs[offset[blocks - 1] + idx[blocks - 1].at(e)] = v;

  const auto sol = solve(m, rhs);
  if (!sol) throw LiftFailure("no invariant lift in degree " + std::to_string(n));
  if (rank(m) != unknowns.size())
    throw LiftFailure("invariant lift is not unique in degree " + std::to_string(n));
  PolyTerms t;
  for (std::size_t u = 0; u < unknowns.size(); ++u) t.add_term(unknowns[u], (*sol)[u]);
  return {s.complement, std::move(t)};
}

}  // namespace

KazhdanPolynomial invariant_lift(const SliceGeometry& s, const KazhdanPolynomial& f) {
  if (!s.lagrangian) throw InvalidInput("invariant_lift needs a Lagrangian ell");
  if (!same_chart(f.chart(), s.slice)) throw ChartMismatch("invariant_lift expects the slice chart");
  std::map<int, KazhdanPolynomial> parts;
  for (const auto& [e, v] : f.terms().terms()) {
    const int n = f.monomial_degree(e);
    auto it = parts.try_emplace(n, s.slice).first;
    it->second += KazhdanPolynomial::monomial(s.slice, e, v);
  }
  KazhdanPolynomial out(s.complement);
  for (const auto& [n, part] : parts) out += lift_homogeneous(s, part, n);
  return out;
}

KazhdanPolynomial bracket_of_lifts(const SliceGeometry& s, const KazhdanPolynomial& lift1,
                                   const KazhdanPolynomial& lift2, Extension ext) {
  auto extend = [&](const KazhdanPolynomial& lift, int salt) {
    KazhdanPolynomial e = extend_to_full(s, lift);
    if (ext == Extension::shifted) {
      // Plus multiples of (y_k - chi_k), which vanish on chi + a^perp.
      const auto y0 = KazhdanPolynomial::variable(s.full, 0);
      const auto one = KazhdanPolynomial::constant(s.full, 1);
      for (std::size_t k = s.complement_dim; k < s.dim(); ++k) {
        const auto vanishing = KazhdanPolynomial::variable(s.full, k) -
                               KazhdanPolynomial::constant(s.full, s.chi_values[k]);
        e += vanishing * (Rational(static_cast<long>(k) + salt) * one + y0 * y0);
      }
    }
    return e;
  };
  const auto b = lie_poisson_bracket(*s.algebra, extend(lift1, 1), extend(lift2, 2));
  return restrict_to_slice(s, restrict_to_chi_plus_a_perp(s, b));
}

KazhdanPolynomial slice_poisson_bracket(const SliceGeometry& s, const KazhdanPolynomial& f1,
                                        const KazhdanPolynomial& f2, Extension ext) {
  return bracket_of_lifts(s, invariant_lift(s, f1), invariant_lift(s, f2), ext);
}

TransversalityReport transversality(const LieAlgebra& g, const Sl2Triple& t,
                                    const std::vector<Vector>& slice_basis,
                                    std::uint64_t seed, std::size_t count) {
  const std::size_t d = g.dim();
  TransversalityReport rep;
  rep.passed = true;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  const Subspace kf = Subspace::span(d, slice_basis);
  const SparseMatrix ad_f = g.ad(t.f);
  std::vector<Vector> image_f;
  for (std::size_t k = 0; k < d; ++k) image_f.push_back(ad_f.apply(unit_vector(d, k)));
  for (std::size_t p = 0; p < count; ++p) {
    Vector x = t.e;
    for (const auto& z : slice_basis) {
      const int a = num(rng);
      const int b = den(rng);
      Rational r(a, b);
      r.canonicalize();
      axpy(x, r, z);
    }
    std::vector<Vector> tangent;
    for (const auto& y : image_f) tangent.push_back(g.bracket(x, y));
    auto [sum, meet] = sum_and_intersection(Subspace::span(d, tangent), kf);
    rep.points.push_back(x);
    rep.intersection_dims.push_back(meet.dim());
    rep.sum_dims.push_back(sum.dim());
    rep.passed = rep.passed && meet.dim() == 0 && sum.dim() == d;
  }
  return rep;
}

}  // namespace walg
