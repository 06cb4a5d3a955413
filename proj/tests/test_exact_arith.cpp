#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "walg/errors.hpp"
#include "walg/linalg.hpp"

using namespace walg;

namespace {

SparseMatrix dense(const DenseMatrix& m) { return SparseMatrix::from_dense(m); }

SparseMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, double fill) {
  std::uniform_real_distribution<double> u(0, 1);
  SparseMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (u(rng) < fill) m.set(i, j, oracle::random_rational(rng));
  // a few dependent rows
  for (std::size_t i = 1; i < r; i += 3)
    for (const auto& [j, v] : m.row(i - 1)) m.add(i, j, 2 * v);
  return m;
}

}  // namespace

TEST_CASE("rational parsing normalizes") {
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK(parse_rational(" 7 ") == 7);
  CHECK(to_string(parse_rational("6/3")) == "2");
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("x"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1/-2"), InvalidInput);
}

TEST_CASE("kernel examples") {
  CHECK(kernel(dense({{0}})).dim() == 1);
  CHECK(kernel(dense({{0}})).basis()[0] == Vector{1});
  CHECK(kernel(SparseMatrix::identity(3)).dim() == 0);
  const auto k = kernel(dense({{1, 2, 3}, {2, 4, 6}}));
  CHECK(k.dim() == 2);
  for (const auto& v : k.basis()) CHECK(is_zero(dense({{1, 2, 3}, {2, 4, 6}}).apply(v)));
}

TEST_CASE("solve examples") {
  const Vector b{3, -1, Rational(1, 2)};
  CHECK(solve(SparseMatrix::identity(3), b) == b);
  const auto x = solve(dense({{1, 1}}), Vector{2});
  REQUIRE(x);
  CHECK((*x)[0] + (*x)[1] == 2);
  CHECK_FALSE(solve(dense({{1}, {1}}), Vector{1, 2}));
}

TEST_CASE("rank examples") {
  CHECK(rank(SparseMatrix(3, 4)) == 0);
  CHECK(rank(SparseMatrix::identity(5)) == 5);
  CHECK(rank(dense({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("sum and intersection examples") {
  const auto u = Subspace::span(2, {{1, 0}});
  const auto [s0, i0] = sum_and_intersection(u, u);
  CHECK(s0 == u);
  CHECK(i0 == u);
  const auto [s1, i1] = sum_and_intersection(u, Subspace::span(2, {{1, 1}}));
  CHECK(s1 == Subspace::whole(2));
  CHECK(i1.dim() == 0);
  const auto p = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}});
  const auto q = Subspace::span(3, {{0, 1, 0}, {0, 0, 1}});
  const auto [s2, i2] = sum_and_intersection(p, q);
  CHECK(s2.dim() == 3);
  CHECK(i2 == Subspace::span(3, {{0, 1, 0}}));
}

TEST_CASE("kernel property: M k = 0 and rank-nullity, both elimination routes") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
    const SparseMatrix m = random_matrix(rng, r, c, 0.5);
    const Subspace k = kernel(m);
    for (const auto& v : k.basis()) CHECK(is_zero(m.apply(v)));
    CHECK(k.dim() + rank(m) == c);
    const auto a = reduced_row_echelon_dense(m);
    const auto b = reduced_row_echelon_sparse(m);
    CHECK(a.pivots == b.pivots);
    CHECK(a.rows == b.rows);
  }
}

TEST_CASE("large sparse matrices take the sparse route and agree with dense") {
  std::mt19937_64 rng(5);
  const SparseMatrix m = random_matrix(rng, 80, 90, 0.05);
  const auto a = reduced_row_echelon_dense(m);
  const auto b = reduced_row_echelon(m);
  CHECK(a.rows == b.rows);
  const Subspace k = kernel(m);
  for (const auto& v : k.basis()) CHECK(is_zero(m.apply(v)));
  CHECK(k.dim() + a.rank() == 90);
}

TEST_CASE("echelon canonicality: equal sets give identical bases") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 6, d = 1 + rng() % n;
    std::vector<Vector> gens;
    for (std::size_t k = 0; k < d; ++k) {
      Vector v(n);
      for (auto& x : v) x = oracle::random_rational(rng);
      gens.push_back(v);
    }
    // another spanning set of the same space: random invertible recombination
    std::vector<Vector> mixed = gens;
    for (std::size_t k = 0; k + 1 < d; ++k) axpy(mixed[k], oracle::random_rational(rng), mixed[k + 1]);
    std::reverse(mixed.begin(), mixed.end());
    mixed.push_back(gens[0] + gens[d - 1]);
    CHECK(Subspace::span(n, gens) == Subspace::span(n, mixed));
    // row order of the input matrix does not matter
    SparseMatrix m(d, n), mr(d, n);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t j = 0; j < n; ++j) {
        if (gens[r][j] != 0) m.set(r, j, gens[r][j]);
        if (gens[d - 1 - r][j] != 0) mr.set(r, j, gens[d - 1 - r][j]);
      }
    CHECK(kernel(m) == kernel(mr));
  }
}

TEST_CASE("subspace coordinates and containment") {
  const auto s = Subspace::span(3, {{1, 1, 0}, {0, 1, 1}});
  CHECK(s.contains(Vector{1, 2, 1}));
  CHECK_FALSE(s.contains(Vector{1, 0, 0}));
  const auto c = s.coordinates(Vector{2, 3, 1});
  REQUIRE(c);
  Vector back = zero_vector(3);
  for (std::size_t k = 0; k < s.dim(); ++k) axpy(back, (*c)[k], s.basis()[k]);
  CHECK(back == Vector{2, 3, 1});
  CHECK(s.annihilator().dim() == 1);
  CHECK(is_zero(Vector{dot(s.annihilator().basis()[0], s.basis()[0])}));
}

TEST_CASE("inverse") {
  const DenseMatrix m{{2, 1}, {1, 1}};
  CHECK(multiply(m, inverse(m)) == identity_matrix(2));
  CHECK_THROWS_AS(inverse({{1, 2}, {2, 4}}), InvalidInput);
}
