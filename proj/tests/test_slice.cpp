#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "walg/errors.hpp"
#include "walg/reduction.hpp"
#include "walg/slice.hpp"

using namespace walg;

namespace {

Vector unit(const LieAlgebra& g, const char* l) { return g.basis_vector(g.index_of(l)); }

ReductionCase sl2() {
  const auto g = make_sln(2);
  return make_case("sl2", g, unit(g, "E12"), {});
}
ReductionCase sl3_min(const char* ell) {
  const auto g = make_sln(3);
  std::vector<Vector> l;
  if (ell) l.push_back(unit(g, ell));
  return make_case("sl3", g, unit(g, "E13"), l);
}
ReductionCase sl3_reg() {
  const auto g = make_sln(3);
  return make_case("sl3", g, unit(g, "E12") + unit(g, "E23"), {});
}

KazhdanPolynomial random_poly(std::mt19937_64& rng, const ChartPtr& chart, int terms, int max_len) {
  KazhdanPolynomial p(chart);
  for (int k = 0; k < terms; ++k) {
    Exponents e(chart->size(), 0);
    const int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
    for (int r = 0; r < len; ++r) ++e[rng() % chart->size()];
    p += KazhdanPolynomial::monomial(chart, e, oracle::random_rational(rng));
  }
  return p;
}

KazhdanPolynomial var(const ChartPtr& c, std::size_t i) { return KazhdanPolynomial::variable(c, i); }

bool is_identity(const DenseMatrix& m) { return m == identity_matrix(m.size()); }

}  // namespace

TEST_CASE("Lie-Poisson bracket examples") {
  const auto c = sl2();
  const auto& s = c.slice;
  const LieAlgebra& g = *s.algebra;  // adapted order E12, H1, E21
  const auto e = var(s.full, 0), h = var(s.full, 1), f = var(s.full, 2);
  CHECK(lie_poisson_bracket(g, e, f) == h);
  CHECK(lie_poisson_bracket(g, e * f, h).is_zero());
  std::mt19937_64 rng(1);
  const auto F = random_poly(rng, s.full, 4, 3);
  CHECK(lie_poisson_bracket(g, F, F).is_zero());
}

TEST_CASE("Lie-Poisson: Jacobi on linear coordinates, Leibniz and homogeneity") {
  const auto c = sl3_min(nullptr);
  const auto& s = c.slice;
  const LieAlgebra& g = *s.algebra;
  const std::size_t d = g.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const auto xi = var(s.full, i), xj = var(s.full, j), xk = var(s.full, k);
        const auto jac = lie_poisson_bracket(g, lie_poisson_bracket(g, xi, xj), xk) +
                         lie_poisson_bracket(g, lie_poisson_bracket(g, xj, xk), xi) +
                         lie_poisson_bracket(g, lie_poisson_bracket(g, xk, xi), xj);
        CHECK(jac.is_zero());
      }
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto F = random_poly(rng, s.full, 3, 2), G = random_poly(rng, s.full, 3, 2),
               H = random_poly(rng, s.full, 2, 2);
    CHECK(lie_poisson_bracket(g, F, G * H) ==
          lie_poisson_bracket(g, F, G) * H + G * lie_poisson_bracket(g, F, H));
    for (int m : {2, 3, 4})
      for (int n : {1, 2, 4}) {
        const auto Fm = F.homogeneous_part(m), Gn = G.homogeneous_part(n);
        const auto b = lie_poisson_bracket(g, Fm, Gn);
        if (!b.is_zero()) CHECK(b == b.homogeneous_part(m + n - 2));
      }
  }
}

TEST_CASE("restrictions") {
  const auto c = sl2();
  const auto& s = c.slice;
  const auto e = var(s.full, 0), h = var(s.full, 1), f = var(s.full, 2);
  CHECK(restrict_to_chi_plus_a_perp(s, f) == KazhdanPolynomial::constant(s.complement, 1));
  CHECK(restrict_to_chi_plus_a_perp(s, e * f - h) == var(s.complement, 0) - var(s.complement, 1));
  CHECK(restrict_to_chi_plus_a_perp(s, KazhdanPolynomial::constant(s.full, 1)) ==
        KazhdanPolynomial::constant(s.complement, 1));
  CHECK_THROWS_AS(restrict_to_chi_plus_a_perp(s, var(s.complement, 0)), ChartMismatch);
  // e-coordinate -> t, h-coordinate -> 0 on the slice
  CHECK(restrict_to_slice(s, var(s.complement, 0)) == var(s.slice, 0));
  CHECK(restrict_to_slice(s, var(s.complement, 1)).is_zero());
}

TEST_CASE("slice Hilbert series against brute-force enumeration") {
  const auto a = sl2();
  CHECK(slice_hilbert_series(a.slice, 8) == std::vector<std::size_t>{1, 0, 0, 0, 1, 0, 0, 0, 1});
  const auto b = sl3_min("E21");
  CHECK(slice_hilbert_series(b.slice, 6) == std::vector<std::size_t>{1, 0, 1, 2, 2, 2, 5});
  CHECK(b.slice.slice->degrees() == std::vector<int>{2, 3, 3, 4});
  CHECK(hilbert_series({}, 3) == std::vector<std::size_t>{1, 0, 0, 0});
  for (const auto& c : {a.slice, b.slice, sl3_reg().slice}) {
    const auto deg = c.slice->degrees();
    CHECK(slice_hilbert_series(c, 12) == oracle::hilbert_bruteforce(deg, 12));
    CHECK(hilbert_series(deg, 12) == oracle::series_product(deg, 12));
    for (int n = 0; n <= 8; ++n)
      CHECK(monomials_of_degree(deg, n).size() == oracle::hilbert_bruteforce(deg, 8)[n]);
  }
}

TEST_CASE("coadjoint flows") {
  const auto c = sl2();
  const auto& s = c.slice;
  const auto zero = coadjoint_flow(s, zero_vector(3));
  CHECK(is_identity(zero.at(5)));
  const auto ff = coadjoint_flow(s, unit_vector(3, 2));
  CHECK(is_identity(multiply(ff.at(1), ff.at(-1))));
  CHECK_FALSE(is_identity(ff.at(1)));
  CHECK_THROWS_AS(coadjoint_flow(s, unit_vector(3, 0)), InvalidInput);

  std::mt19937_64 rng(3);
  for (const auto& cs : {sl3_min(nullptr), sl3_min("E21"), sl3_reg()}) {
    const auto& sg = cs.slice;
    const std::size_t d = sg.dim();
    for (int trial = 0; trial < 6; ++trial) {
      Vector x = zero_vector(d);
      for (auto k : sg.n_ell_indices) x[k] = oracle::random_rational(rng);
      const auto fl = coadjoint_flow(sg, x);
      const Rational t = oracle::random_rational(rng), u = oracle::random_rational(rng);
      CHECK(multiply(fl.at(t), fl.at(u)) == fl.at(t + u));
      Vector xi = sg.chi_values;
      for (std::size_t k = 0; k < sg.complement_dim; ++k) xi[k] = oracle::random_rational(rng);
      const Vector moved = walg::apply(fl.at(t), xi);
      for (std::size_t k = sg.complement_dim; k < d; ++k) CHECK(moved[k] == sg.chi_values[k]);
    }
  }
}

TEST_CASE("invariant lifts") {
  const auto c = sl2();
  const auto& s = c.slice;
  CHECK(invariant_lift(s, KazhdanPolynomial::constant(s.slice, 1)) ==
        KazhdanPolynomial::constant(s.complement, 1));
  const auto lift = invariant_lift(s, 2 * var(s.slice, 0));
  // 2e + h^2/2 on the complement chart (E12, H1)
  const auto expect = 2 * var(s.complement, 0) + Rational(1, 2) * var(s.complement, 1) * var(s.complement, 1);
  CHECK(lift == expect);
  CHECK(restrict_to_slice(s, lift) == 2 * var(s.slice, 0));

  std::mt19937_64 rng(4);
  for (const auto& cs : {sl2(), sl3_min("E21"), sl3_min("E32"), sl3_reg()}) {
    const auto& sg = cs.slice;
    for (int trial = 0; trial < 4; ++trial) {
      const auto F = random_poly(rng, sg.slice, 3, 2);
      const auto L = invariant_lift(sg, F);
      CHECK(restrict_to_slice(sg, L) == F);
      for (auto x : sg.n_ell_indices) CHECK(infinitesimal_action(sg, x, L).is_zero());
      Vector gen = zero_vector(sg.dim());
      for (auto k : sg.n_ell_indices) gen[k] = oracle::random_rational(rng);
      const auto pulled = flow_pullback(sg, coadjoint_flow(sg, gen), L);
      const std::size_t u = pulled.chart()->size() - 1;
      for (const auto& [e, v] : pulled.terms().terms()) CHECK(e[u] == 0);
    }
  }
  CHECK_THROWS_AS(invariant_lift(sl3_min(nullptr).slice, KazhdanPolynomial::constant(sl3_min(nullptr).slice.slice, 1)),
                  InvalidInput);
}

TEST_CASE("slice Poisson bracket") {
  const auto a = sl2();
  const auto t = var(a.slice.slice, 0);
  CHECK(slice_poisson_bracket(a.slice, t, t * t).is_zero());

  const auto b = sl3_min("E21");
  const auto& s = b.slice;
  const auto t2 = var(s.slice, 1), t3 = var(s.slice, 2);
  const auto br = slice_poisson_bracket(s, t2, t3);
  CHECK_FALSE(br.is_zero());
  CHECK(br.is_homogeneous());
  CHECK(br.degree() == 4);
  CHECK(br == slice_poisson_bracket(s, t2, t3, Extension::shifted));
  CHECK(slice_poisson_bracket(s, t3, t2) == -br);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto F = random_poly(rng, s.slice, 3, 2), G = random_poly(rng, s.slice, 3, 2);
    const auto plain = slice_poisson_bracket(s, F, G);
    CHECK(plain == slice_poisson_bracket(s, F, G, Extension::shifted));
    CHECK(slice_poisson_bracket(s, F, F).is_zero());
  }
  // homogeneity
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const auto x = var(s.slice, i), y = var(s.slice, j);
      const auto z = slice_poisson_bracket(s, x, y);
      if (!z.is_zero()) CHECK(z.degree() == *x.degree() + *y.degree() - 2);
    }
}

TEST_CASE("transversality at sample points") {
  for (const auto& cs : {sl2(), sl3_min(nullptr), sl3_reg()}) {
    const auto r = transversality(cs.ambient, cs.triple, cs.basis.slice_basis, 99);
    CHECK(r.passed);
    CHECK(r.points.size() == 3);
    for (auto d : r.intersection_dims) CHECK(d == 0);
    for (auto d : r.sum_dims) CHECK(d == cs.ambient.dim());
  }
}
