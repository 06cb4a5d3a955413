#include "walg/pbw.hpp"

#include <mutex>

#include "walg/errors.hpp"

namespace walg {

int FilteredDegree::value() const {
  if (!value_) throw InternalError("degree of the zero element has no value");
  return *value_;
}

std::strong_ordering operator<=>(const FilteredDegree& a, const FilteredDegree& b) {
  if (!a.value_ && !b.value_) return std::strong_ordering::equal;
  if (!a.value_) return std::strong_ordering::less;
  if (!b.value_) return std::strong_ordering::greater;
  return *a.value_ <=> *b.value_;
}

std::string FilteredDegree::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("bottom");
}

PbwAlgebra::PbwAlgebra(std::shared_ptr<const LieAlgebra> g, std::vector<int> weights,
                       bool memoize)
    : g_(std::move(g)), weights_(std::move(weights)) {
  if (weights_.size() != g_->dim()) throw DimensionMismatch("PbwAlgebra: one weight per generator");
  chart_ = make_kazhdan_chart("g*", g_->labels(), weights_);
  if (memoize) memo_ = std::make_unique<Memo>();
}

UEAElement PbwAlgebra::one() const { return UEAElement::single(Exponents(dim(), 0)); }

UEAElement PbwAlgebra::generator(std::size_t i) const {
  Exponents e(dim(), 0);
  e.at(i) = 1;
  return UEAElement::single(std::move(e));
}

UEAElement PbwAlgebra::from_vector(const Vector& v) const {
  if (v.size() != dim()) throw DimensionMismatch("from_vector");
  UEAElement u;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) u.add_scaled(generator(i), v[i]);
  return u;
}

UEAElement PbwAlgebra::monomial(const Exponents& e, const Rational& c) const {
  if (e.size() != dim()) throw DimensionMismatch("monomial length");
  return UEAElement::single(e, c);
}

std::size_t PbwAlgebra::memo_size() const {
  if (!memo_) return 0;
  std::shared_lock lock(memo_->mutex);
  return memo_->table.size();
}

UEAElement PbwAlgebra::left_multiply_monomial(std::size_t k, const Exponents& m) const {
  if (!memo_) return compute_left_multiply(k, m);
  Exponents key = m;
  key.push_back(static_cast<std::uint16_t>(k));
  {
    std::shared_lock lock(memo_->mutex);
    auto it = memo_->table.find(key);
    if (it != memo_->table.end()) return it->second;
  }
  UEAElement r = compute_left_multiply(k, m);
  std::unique_lock lock(memo_->mutex);
  memo_->table.try_emplace(std::move(key), r);
  return r;
}

UEAElement PbwAlgebra::compute_left_multiply(std::size_t k, const Exponents& m) const {
  std::size_t j = 0;
  while (j < m.size() && m[j] == 0) ++j;
  if (j == m.size() || k <= j) {
    Exponents r = m;
    ++r[k];
    return UEAElement::single(std::move(r));
  }
  // x_k x_j m' = x_j (x_k m') + [x_k, x_j] m'
  Exponents rest = m;
  --rest[j];
  UEAElement out = left_multiply(j, left_multiply_monomial(k, rest));
  for (const auto& [c, v] : g_->bracket_basis(k, j))
    out.add_scaled(left_multiply_monomial(c, rest), v);
  return out;
}

UEAElement PbwAlgebra::left_multiply(std::size_t k, const UEAElement& u) const {
  UEAElement out;
  for (const auto& [m, c] : u.terms()) out.add_scaled(left_multiply_monomial(k, m), c);
  return out;
}

UEAElement PbwAlgebra::multiply(const UEAElement& u, const UEAElement& v) const {
  UEAElement out;
  for (const auto& [m, c] : u.terms()) {
    UEAElement acc = v;
    for (std::size_t i = m.size(); i-- > 0;)
      for (std::uint16_t r = 0; r < m[i]; ++r) acc = left_multiply(i, acc);
    out.add_scaled(acc, c);
  }
  return out;
}

UEAElement PbwAlgebra::commutator(const UEAElement& u, const UEAElement& v) const {
  return multiply(u, v) - multiply(v, u);
}

int PbwAlgebra::monomial_degree(const Exponents& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * (weights_[i] + 2);
  return d;
}

std::size_t PbwAlgebra::standard_degree(const Exponents& e) const {
  std::size_t d = 0;
  for (auto x : e) d += x;
  return d;
}

FilteredDegree PbwAlgebra::kazhdan_degree(const UEAElement& u) const {
  FilteredDegree best = FilteredDegree::bottom();
  for (const auto& [m, c] : u.terms()) {
    const auto d = FilteredDegree::of(monomial_degree(m));
    if (d > best) best = d;
  }
  return best;
}

KazhdanPolynomial symbol(const PbwAlgebra& U, const UEAElement& u, int n) {
  if (!U.kazhdan_degree(u).at_most(n))
    throw DegreeTooLow("symbol requested at degree " + std::to_string(n) + " below degree " +
                       U.kazhdan_degree(u).to_string());
  PolyTerms t;
  for (const auto& [m, c] : u.terms())
    if (U.monomial_degree(m) == n) t.add_term(m, c);
  return {U.chart(), std::move(t)};
}

UEAElement casimir(const PbwAlgebra& U) {
  const DenseMatrix kinv = inverse(U.lie().killing());
  UEAElement omega;
  for (std::size_t i = 0; i < U.dim(); ++i)
    for (std::size_t j = 0; j < U.dim(); ++j)
      if (kinv[i][j] != 0)
        omega.add_scaled(U.multiply(U.generator(i), U.generator(j)), kinv[i][j]);
  for (std::size_t k = 0; k < U.dim(); ++k)
    if (!U.commutator(omega, U.generator(k)).is_zero())
      throw InternalError("Casimir element fails to commute with " + U.lie().label(k));
  return omega;
}

std::string format_element(const PbwAlgebra& U, const UEAElement& u) {
  PolyTerms t;
  for (const auto& [m, c] : u.terms()) t.add_term(m, c);
  return KazhdanPolynomial(U.chart(), std::move(t)).to_string();
}

}  // namespace walg
