#include <doctest.h>

#include "oracles.hpp"
#include "walg/adapted_basis.hpp"
#include "walg/errors.hpp"
#include "walg/nilpotent.hpp"

using namespace walg;

namespace {

std::vector<BracketEntry> sl2_table(bool broken = false) {
  // basis e, h, f
  std::vector<BracketEntry> t;
  t.push_back({0, 1, {{0, -2}}});
  t.push_back({0, 2, broken ? SparseVector{{0, 1}} : SparseVector{{1, 1}}});
  t.push_back({1, 2, {{2, -2}}});
  return t;
}

Vector unit(const LieAlgebra& g, const char* label) { return g.basis_vector(g.index_of(label)); }

struct Case {
  const char* name;
  std::size_t n;
  std::vector<std::pair<const char*, int>> e;
  std::vector<std::vector<const char*>> ell;
};

Vector combo(const LieAlgebra& g, const std::vector<std::pair<const char*, int>>& terms) {
  Vector v = zero_vector(g.dim());
  for (const auto& [l, c] : terms) v[g.index_of(l)] += c;
  return v;
}

const std::vector<Case>& cases() {
  static const std::vector<Case> c = {
      {"sl2 regular", 2, {{"E12", 1}}, {}},
      {"sl3 minimal", 3, {{"E13", 1}}, {}},
      {"sl3 minimal <E21>", 3, {{"E13", 1}}, {{"E21"}}},
      {"sl3 minimal <E32>", 3, {{"E13", 1}}, {{"E32"}}},
      {"sl3 principal", 3, {{"E12", 1}, {"E23", 1}}, {}},
      {"sl4 [2,1,1]", 4, {{"E12", 1}}, {}},
      {"sl4 [2,2]", 4, {{"E12", 1}, {"E34", 1}}, {}},
      {"sl4 [3,1]", 4, {{"E12", 1}, {"E23", 1}}, {}},
      {"sl4 regular", 4, {{"E12", 1}, {"E23", 1}, {"E34", 1}}, {}},
      {"sl4 minimal <E21, E31>", 4, {{"E14", 1}}, {{"E21"}, {"E31"}}},
  };
  return c;
}

}  // namespace

TEST_CASE("make_lie_algebra validates") {
  const auto g = make_lie_algebra({"e", "h", "f"}, sl2_table());
  CHECK(g.dim() == 3);
  CHECK(g.bracket(unit(g, "e"), unit(g, "f")) == unit(g, "h"));
  CHECK(g.bracket(unit(g, "h"), unit(g, "e")) == 2 * unit(g, "e"));
  CHECK_THROWS_AS(make_lie_algebra({"x", "y"}, {}), DegenerateKillingForm);
  CHECK_THROWS_AS(make_lie_algebra({"e", "h", "f"}, sl2_table(true)), JacobiViolation);
}

TEST_CASE("Killing form of sl2 by hand") {
  const auto g = make_lie_algebra({"e", "h", "f"}, sl2_table());
  CHECK(g.killing(unit(g, "e"), unit(g, "f")) == 4);
  CHECK(g.killing(unit(g, "h"), unit(g, "h")) == 8);
  CHECK(g.killing(unit(g, "e"), unit(g, "e")) == 0);
}

TEST_CASE("make_sln matches matrix commutators and kappa = 2n trace") {
  for (std::size_t n : {2u, 3u, 4u}) {
    const auto g = make_sln(n);
    const oracle::SlnMatrices m(n);
    CHECK(g.dim() == n * n - 1);
    REQUIRE(g.labels() == m.labels);
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j) {
        CHECK(g.bracket(g.basis_vector(i), g.basis_vector(j)) == m.bracket(i, j));
        const Rational tr = m.trace_form(g.basis_vector(i), g.basis_vector(j));
        CHECK(g.killing()[i][j] == Rational(2 * static_cast<long>(n)) * tr);
        if (n < 4) CHECK(g.killing()[i][j] == m.killing(i, j));
      }
  }
  const auto g3 = make_sln(3);
  CHECK(g3.killing(unit(g3, "E13"), unit(g3, "E31")) == 6);
}

TEST_CASE("sl2 triple completion") {
  const auto g = make_sln(2);
  const auto t = complete_sl2_triple(g, unit(g, "E12"));
  CHECK(t.h == unit(g, "H1"));
  CHECK(t.f == unit(g, "E21"));
  CHECK(is_sl2_triple(g, t));
}

TEST_CASE("sl3 minimal triple: h acts as diag(1,0,-1)") {
  const auto g = make_sln(3);
  const oracle::SlnMatrices m(3);
  const auto t = complete_sl2_triple(g, unit(g, "E13"));
  CHECK(is_sl2_triple(g, t));
  const auto hm = m.matrix(t.h);
  CHECK(hm[0][0] == 1);
  CHECK(hm[1][1] == 0);
  CHECK(hm[2][2] == -1);
  CHECK(t.f == unit(g, "E31"));
}

TEST_CASE("triple completion rejects bad input") {
  const auto g = make_sln(3);
  CHECK_THROWS_AS(complete_sl2_triple(g, unit(g, "H1")), NotNilpotent);
  CHECK_THROWS_AS(complete_sl2_triple(g, zero_vector(g.dim())), InvalidInput);
}

TEST_CASE("triples are self-verifying on random conjugates") {
  // e' = exp(ad y) e for nilpotent y stays nilpotent; completion must succeed.
  const auto g = make_sln(3);
  const oracle::SlnMatrices m(3);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    oracle::Mat u = oracle::zero(3), ui = oracle::zero(3);
    for (int i = 0; i < 3; ++i) u[i][i] = ui[i][i] = 1;
    const Rational a = oracle::random_rational(rng), b = oracle::random_rational(rng),
                   c = oracle::random_rational(rng);
    u[0][1] = a; u[0][2] = b; u[1][2] = c;
    ui[0][1] = -a; ui[0][2] = a * c - b; ui[1][2] = -c;
    oracle::Mat e = oracle::zero(3);
    e[1][0] = 1;
    e[2][1] = 1;
    const auto conj = oracle::mul(oracle::mul(u, e), ui);
    const auto t = complete_sl2_triple(g, m.coords(conj));
    CHECK(is_sl2_triple(g, t));
  }
}

TEST_CASE("gradings") {
  const auto g = make_sln(3);
  const auto t = complete_sl2_triple(g, unit(g, "E13"));
  const auto gr = ad_h_grading(g, t);
  CHECK(gr.dim(2) == 1);
  CHECK(gr.dim(1) == 2);
  CHECK(gr.dim(0) == 2);
  CHECK(gr.dim(-1) == 2);
  CHECK(gr.dim(-2) == 1);
  Vector reg = unit(g, "E12") + unit(g, "E23");
  const auto tp = complete_sl2_triple(g, reg);
  const auto grp = ad_h_grading(g, tp);
  CHECK(grp.dim(4) == 1);
  CHECK(grp.dim(2) == 2);
  CHECK(grp.dim(0) == 2);
  CHECK(grp.dim(1) == 0);
  CHECK(grp.dim(-1) == 0);
  const oracle::SlnMatrices m(3);
  const auto hm = m.matrix(tp.h);
  CHECK(hm[0][0] == 2);
  CHECK(hm[2][2] == -2);
  const auto g2 = make_sln(2);
  const auto gr2 = ad_h_grading(g2, complete_sl2_triple(g2, unit(g2, "E12")));
  CHECK(gr2.piece(2) == Subspace::span(3, {unit(g2, "E12")}));
  CHECK(gr2.piece(0) == Subspace::span(3, {unit(g2, "H1")}));
  CHECK(gr2.piece(-2) == Subspace::span(3, {unit(g2, "E21")}));
}

TEST_CASE("chi and omega") {
  const auto g2 = make_sln(2);
  const auto t2 = complete_sl2_triple(g2, unit(g2, "E12"));
  const auto c2 = chi(g2, t2);
  CHECK(c2(unit(g2, "E21")) == 1);
  CHECK(c2(unit(g2, "E12")) == 0);
  CHECK(c2(unit(g2, "H1")) == 0);

  const auto g = make_sln(3);
  const auto t = complete_sl2_triple(g, unit(g, "E13"));
  const auto c = chi(g, t);
  for (std::size_t k = 0; k < g.dim(); ++k)
    CHECK(c(g.basis_vector(k)) == (g.label(k) == "E31" ? 1 : 0));
  CHECK(omega(g, c, unit(g, "E21"), unit(g, "E32")) == -1);
  const auto gr = ad_h_grading(g, t);
  const auto s = symplectic_data(g, gr, c, {unit(g, "E21")});
  CHECK(s.lagrangian());
  CHECK(s.ell_perp == s.ell);
  CHECK_THROWS_AS(symplectic_data(g, gr, c, {unit(g, "E12")}), NotInsideGm1);
  CHECK_THROWS_AS(symplectic_data(g, gr, c, {unit(g, "E21"), unit(g, "E32")}), NotIsotropic);
  const auto s0 = symplectic_data(g, gr, c, {});
  CHECK(s0.gm1_dim() == 2);
  CHECK(s0.ell_perp.dim() == 2);
}

TEST_CASE("nilpotent subalgebras and Ker ad f") {
  const auto g2 = make_sln(2);
  const auto t2 = complete_sl2_triple(g2, unit(g2, "E12"));
  const auto gr2 = ad_h_grading(g2, t2);
  const auto c2 = chi(g2, t2);
  const auto p2 = make_nilpotent_pair(g2, gr2, c2, symplectic_data(g2, gr2, c2, {}));
  CHECK(p2.a == Subspace::span(3, {unit(g2, "E21")}));
  CHECK(p2.n_ell == p2.a);
  CHECK(ker_ad_f(g2, t2) == Subspace::span(3, {unit(g2, "E21")}));

  const auto g = make_sln(3);
  const auto t = complete_sl2_triple(g, unit(g, "E13"));
  const auto gr = ad_h_grading(g, t);
  const auto c = chi(g, t);
  const auto p0 = make_nilpotent_pair(g, gr, c, symplectic_data(g, gr, c, {}));
  CHECK(p0.a == Subspace::span(8, {unit(g, "E31")}));
  CHECK(p0.n_ell == Subspace::span(8, {unit(g, "E21"), unit(g, "E32"), unit(g, "E31")}));
  const auto pl = make_nilpotent_pair(g, gr, c, symplectic_data(g, gr, c, {unit(g, "E21")}));
  CHECK(pl.a == Subspace::span(8, {unit(g, "E21"), unit(g, "E31")}));
  CHECK(pl.n_ell == pl.a);
  const auto kf = ker_ad_f(g, t);
  CHECK(kf == Subspace::span(8, {unit(g, "E31"), unit(g, "E21"), unit(g, "E32"),
                                 unit(g, "H1") - unit(g, "H2")}));
  CHECK(ker_ad_f(g, complete_sl2_triple(g, unit(g, "E12") + unit(g, "E23"))).dim() == 2);
}

TEST_CASE("decomposition examples") {
  const auto g2 = make_sln(2);
  const auto t2 = complete_sl2_triple(g2, unit(g2, "E12"));
  const auto gr2 = ad_h_grading(g2, t2);
  const auto c2 = chi(g2, t2);
  const auto r2 = decomposition_check(g2, t2, gr2,
                                      make_nilpotent_pair(g2, gr2, c2, symplectic_data(g2, gr2, c2, {})));
  CHECK(r2.a_perp_dim == 2);
  CHECK(r2.n_e_dim == 1);
  CHECK(r2.ker_f_dim == 1);

  const auto g = make_sln(3);
  const auto t = complete_sl2_triple(g, unit(g, "E13"));
  const auto gr = ad_h_grading(g, t);
  const auto c = chi(g, t);
  const auto r = decomposition_check(
      g, t, gr, make_nilpotent_pair(g, gr, c, symplectic_data(g, gr, c, {unit(g, "E21")})));
  CHECK(r.a_perp_dim == 6);
  CHECK(r.n_e_dim == 2);
  CHECK(r.ker_f_dim == 4);
  CHECK(r.intersection_dim == 0);
}

TEST_CASE("structural invariants on every tested case") {
  for (const auto& cs : cases()) {
    CAPTURE(cs.name);
    const auto g = make_sln(cs.n);
    const std::size_t d = g.dim();
    const auto t = complete_sl2_triple(g, combo(g, cs.e));
    REQUIRE(is_sl2_triple(g, t));
    const auto gr = ad_h_grading(g, t);
    const auto c = chi(g, t);
    std::vector<Vector> ell;
    for (const auto& v : cs.ell) ell.push_back(unit(g, v[0]));
    const auto s = symplectic_data(g, gr, c, ell);
    const auto p = make_nilpotent_pair(g, gr, c, s);

    std::size_t total = 0;
    for (const auto& [wi, si] : gr.pieces) {
      total += si.dim();
      for (const auto& x : si.basis()) {
        CHECK(g.bracket(t.h, x) == Rational(wi) * x);
        for (const auto& [wj, sj] : gr.pieces)
          for (const auto& y : sj.basis()) {
            CHECK(gr.piece(wi + wj).contains(g.bracket(x, y)));
            if (wi + wj != 0) CHECK(g.killing(x, y) == 0);
          }
      }
      if (wi != -2)
        for (const auto& x : si.basis()) CHECK(c(x) == 0);
    }
    CHECK(total == d);
    for (const auto& x : p.a.basis())
      for (const auto& y : p.n_ell.basis()) CHECK(c(g.bracket(x, y)) == 0);
    CHECK(p.n_ell.contains(p.a));
    const auto r = decomposition_check(g, t, gr, p);
    CHECK(r.a_perp_dim == r.n_ell_dim + r.g0_dim + r.gm1_dim);
    CHECK(r.intersection_dim == 0);
    CHECK(r.n_e_dim + r.ker_f_dim == r.a_perp_dim);

    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          const Vector xi = g.basis_vector(i), xj = g.basis_vector(j), xk = g.basis_vector(k);
          CHECK(g.killing(g.bracket(xi, xj), xk) == g.killing(xi, g.bracket(xj, xk)));
        }

    const auto b = adapted_basis(g, t, gr, c, s, p);
    CHECK(b.dim() == d);
    CHECK(b.complement_dim == d - p.a.dim());
    for (std::size_t k = 0; k < d; ++k) {
      CHECK(b.to_adapted(b.vectors[k]) == unit_vector(d, k));
      CHECK(b.in_a(k) == p.a.contains(b.vectors[k]));
      CHECK(c(b.vectors[k]) == b.chi_values[k]);
    }
    for (auto k : b.n_ell_indices) CHECK(p.n_ell.contains(b.vectors[k]));
    CHECK(b.n_ell_indices.size() == p.n_ell.dim());
  }
}

TEST_CASE("change_basis reproduces the algebra") {
  const auto g = make_sln(2);
  std::vector<Vector> basis{unit(g, "E12"), unit(g, "H1"), unit(g, "E21")};
  const auto h = change_basis(g, basis, {"e", "h", "f"});
  CHECK(h.bracket(h.basis_vector(0), h.basis_vector(2)) == h.basis_vector(1));
  CHECK(format_vector(g, Vector{0, 2, -1}) == "2*E21 - H1");
}
