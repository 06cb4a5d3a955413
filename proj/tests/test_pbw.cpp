#include <doctest.h>

#include <future>
#include <random>

#include "oracles.hpp"
#include "walg/errors.hpp"
#include "walg/pbw.hpp"
#include "walg/reduction.hpp"
#include "walg/slice.hpp"

using namespace walg;

namespace {

// sl_n in its ambient basis, graded by ad h for a diagonal h.
struct Ambient {
  std::size_t n;
  oracle::SlnMatrices m;
  std::shared_ptr<const LieAlgebra> g;
  std::shared_ptr<PbwAlgebra> U;

  Ambient(std::size_t n_, const std::vector<int>& h_diag, bool memo = true)
      : n(n_), m(n_), g(std::make_shared<const LieAlgebra>(make_sln(n_))) {
    std::vector<int> w;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) w.push_back(h_diag[i] - h_diag[j]);
    for (std::size_t i = 0; i + 1 < n; ++i) w.push_back(0);
    U = std::make_shared<PbwAlgebra>(g, w, memo);
  }

  oracle::BracketFn bracket() const {
    return [this](std::size_t a, std::size_t b) {
      std::vector<std::pair<std::size_t, oracle::Q>> out;
      const auto v = m.bracket(a, b);
      for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) out.emplace_back(k, v[k]);
      return out;
    };
  }
};

oracle::BracketFn from_table(const LieAlgebra& g) {
  return [&g](std::size_t a, std::size_t b) {
    std::vector<std::pair<std::size_t, oracle::Q>> out;
    for (const auto& [k, v] : g.bracket_basis(a, b)) out.emplace_back(k, v);
    return out;
  };
}

UEAElement from_words(const PbwAlgebra& U, const oracle::WordSum& s) {
  UEAElement u;
  for (const auto& [w, c] : s) u.add_term(oracle::exponents(w, U.dim()), c);
  return u;
}

UEAElement word_product(const PbwAlgebra& U, const oracle::Word& w) {
  UEAElement u = U.one();
  for (auto x : w) u = U.multiply(u, U.generator(x));
  return u;
}

Exponents random_monomial(std::mt19937_64& rng, std::size_t d, int max_standard) {
  Exponents e(d, 0);
  const int len = static_cast<int>(rng() % static_cast<unsigned>(max_standard + 1));
  for (int k = 0; k < len; ++k) ++e[rng() % d];
  return e;
}

UEAElement random_element(std::mt19937_64& rng, const PbwAlgebra& U, int terms, int max_standard) {
  UEAElement u;
  for (int k = 0; k < terms; ++k)
    u.add_term(random_monomial(rng, U.dim(), max_standard), oracle::random_rational(rng));
  return u;
}

ReductionCase sl2_case() {
  const auto g = make_sln(2);
  return make_case("sl2", g, g.basis_vector(g.index_of("E12")), {});
}

void engine_properties(const PbwAlgebra& U, const oracle::BracketFn& br, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t d = U.dim();
  // straightening: library vs both rewriting orders, 120 random words
  for (int trial = 0; trial < 120; ++trial) {
    oracle::Word w(1 + rng() % 5);
    for (auto& x : w) x = rng() % d;
    const oracle::WordSum start{{w, 1}};
    const auto left = oracle::straighten(start, br, true);
    const auto right = oracle::straighten(start, br, false);
    CHECK(left == right);
    CHECK(word_product(U, w) == from_words(U, left));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = random_element(rng, U, 2, 2), v = random_element(rng, U, 2, 2),
               w = random_element(rng, U, 2, 2);
    CHECK(U.multiply(U.multiply(u, v), w) == U.multiply(u, U.multiply(v, w)));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_monomial(rng, d, 3), b = random_monomial(rng, d, 3);
    const UEAElement u = U.monomial(a, oracle::random_rational(rng) + 7);
    const UEAElement v = U.monomial(b, 1);
    const int m = U.monomial_degree(a), n = U.monomial_degree(b);
    const auto uv = U.multiply(u, v);
    CHECK(U.kazhdan_degree(uv) == FilteredDegree::of(m + n));
    CHECK(U.kazhdan_degree(U.commutator(u, v)).at_most(m + n - 2));
    CHECK(symbol(U, uv, m + n) == symbol(U, u, m) * symbol(U, v, n));
    CHECK(symbol(U, U.commutator(u, v), m + n - 2) ==
          lie_poisson_bracket(U.lie(), symbol(U, u, m), symbol(U, v, n)));
  }
}

}  // namespace

TEST_CASE("unit and basic straightening in sl2 (order e < h < f)") {
  const auto c = sl2_case();
  const PbwAlgebra& U = *c.pbw;
  REQUIRE(c.basis.labels == std::vector<std::string>{"E12", "H1", "E21"});
  const auto e = U.generator(0), h = U.generator(1), f = U.generator(2);
  std::mt19937_64 rng(1);
  const auto u = random_element(rng, U, 3, 3);
  CHECK(U.multiply(U.one(), u) == u);
  CHECK(U.multiply(u, U.one()) == u);
  UEAElement expect = U.multiply(e, f);
  expect.add_scaled(h, -1);
  CHECK(U.multiply(f, e) == expect);
  // f e f via two independent rewriting orders
  const oracle::WordSum w{{{2, 0, 2}, 1}};
  const auto l = oracle::straighten(w, from_table(U.lie()), true);
  CHECK(l == oracle::straighten(w, from_table(U.lie()), false));
  CHECK(U.multiply(U.multiply(f, e), f) == from_words(U, l));
}

TEST_CASE("commutators and degrees in sl2") {
  const auto c = sl2_case();
  const PbwAlgebra& U = *c.pbw;
  const auto e = U.generator(0), h = U.generator(1), f = U.generator(2);
  CHECK(U.commutator(e, f) == h);
  CHECK(U.commutator(e, e).is_zero());
  CHECK(U.kazhdan_degree(e) == FilteredDegree::of(4));
  CHECK(U.kazhdan_degree(h) == FilteredDegree::of(2));
  CHECK(U.kazhdan_degree(f) == FilteredDegree::of(0));
  CHECK(U.kazhdan_degree(U.one()) == FilteredDegree::of(0));
  CHECK(U.kazhdan_degree(UEAElement()).is_bottom());
  CHECK(U.kazhdan_degree(U.commutator(e, f)).at_most(4 + 0 - 2));
}

TEST_CASE("Casimir: trace-form normalization, centrality, degree") {
  const auto c = sl2_case();
  const PbwAlgebra& U = *c.pbw;
  const auto omega = casimir(U);
  // ef + fe + h^2/2 from the trace form, straightened by the word oracle
  const oracle::WordSum tr{{{0, 2}, 1}, {{2, 0}, 1}, {{1, 1}, oracle::Q(1, 2)}};
  const auto expect = from_words(U, oracle::straighten(tr, from_table(U.lie()), true));
  UEAElement scaled;
  scaled.add_scaled(omega, 4);  // kappa = 2n trace with n = 2
  CHECK(scaled == expect);
  for (std::size_t k = 0; k < U.dim(); ++k) CHECK(U.commutator(omega, U.generator(k)).is_zero());
  CHECK(U.kazhdan_degree(omega) == FilteredDegree::of(4));

  Ambient a3(3, {1, 0, -1});
  const auto om3 = casimir(*a3.U);
  CHECK(a3.U->commutator(om3, a3.U->generator(a3.g->index_of("E12"))).is_zero());
  CHECK(a3.U->kazhdan_degree(om3) == FilteredDegree::of(4));
  Ambient a4(4, {1, 0, 0, -1});
  CHECK(a4.U->kazhdan_degree(casimir(*a4.U)) == FilteredDegree::of(4));
}

TEST_CASE("symbols") {
  const auto c = sl2_case();
  const PbwAlgebra& U = *c.pbw;
  CHECK(symbol(U, U.one(), 0) == KazhdanPolynomial::constant(U.chart(), 1));
  // 2ef - h + h^2/2
  UEAElement u = U.monomial({1, 0, 1}, 2);
  u.add_term({0, 1, 0}, -1);
  u.add_term({0, 2, 0}, Rational(1, 2));
  KazhdanPolynomial expect = KazhdanPolynomial::monomial(U.chart(), {1, 0, 1}, 2) +
                             KazhdanPolynomial::monomial(U.chart(), {0, 2, 0}, Rational(1, 2));
  CHECK(symbol(U, u, 4) == expect);
  CHECK(symbol(U, u, 5).is_zero());
  CHECK_THROWS_AS(symbol(U, u, 3), DegreeTooLow);
}

TEST_CASE("engine properties: sl2 adapted basis") {
  const auto c = sl2_case();
  engine_properties(*c.pbw, from_table(c.pbw->lie()), 101);
}

TEST_CASE("engine properties: sl3 ambient basis against matrix commutators") {
  Ambient a(3, {1, 0, -1});
  engine_properties(*a.U, a.bracket(), 202);
}

TEST_CASE("engine properties: sl4 ambient basis against matrix commutators") {
  Ambient a(4, {3, 1, -1, -3});
  engine_properties(*a.U, a.bracket(), 303);
}

TEST_CASE("memoization does not change results and tolerates concurrent readers") {
  Ambient memo(3, {1, 0, -1}, true), plain(3, {1, 0, -1}, false);
  CHECK(memo.U->memoized());
  CHECK_FALSE(plain.U->memoized());
  std::mt19937_64 rng(7);
  std::vector<std::pair<UEAElement, UEAElement>> pairs;
  for (int k = 0; k < 40; ++k)
    pairs.emplace_back(random_element(rng, *memo.U, 2, 3), random_element(rng, *memo.U, 2, 3));
  std::vector<UEAElement> expect;
  for (const auto& [u, v] : pairs) expect.push_back(plain.U->multiply(u, v));
  std::vector<std::future<bool>> jobs;
  for (int t = 0; t < 4; ++t)
    jobs.push_back(std::async(std::launch::async, [&] {
      bool ok = true;
      for (std::size_t k = 0; k < pairs.size(); ++k)
        ok = ok && memo.U->multiply(pairs[k].first, pairs[k].second) == expect[k];
      return ok;
    }));
  for (auto& j : jobs) CHECK(j.get());
  CHECK(memo.U->memo_size() > 0);
}
