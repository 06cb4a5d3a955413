#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "walg/combination.hpp"
#include "walg/lie_algebra.hpp"
#include "walg/polynomial.hpp"

namespace walg {

struct PbwTag;
/// Combination of ordered monomials x_1^{a_1} ... x_d^{a_d}.
using UEAElement = LinearCombination<PbwTag>;

/// Kazhdan filtration degree with a bottom value for the zero element.
class FilteredDegree {
 public:
  static FilteredDegree bottom() { return FilteredDegree(); }
  static FilteredDegree of(int n) { return FilteredDegree(n); }

  bool is_bottom() const { return !value_; }
  /// Throws InternalError on bottom.
  int value() const;
  /// True when this degree is at most n (bottom is below everything).
  bool at_most(int n) const { return !value_ || *value_ <= n; }

  friend bool operator==(const FilteredDegree&, const FilteredDegree&) = default;
  friend std::strong_ordering operator<=>(const FilteredDegree& a, const FilteredDegree& b);

  std::string to_string() const;

 private:
  FilteredDegree() = default;
  explicit FilteredDegree(int n) : value_(n) {}
  std::optional<int> value_;
};

/// The enveloping algebra of a Lie algebra in its fixed basis order, with
/// Kazhdan degrees weight + 2 on generators.
class PbwAlgebra {
 public:
  PbwAlgebra(std::shared_ptr<const LieAlgebra> g, std::vector<int> weights,
             bool memoize = true);

  const LieAlgebra& lie() const { return *g_; }
  std::size_t dim() const { return g_->dim(); }
  const std::vector<int>& weights() const { return weights_; }
  /// Chart of Sg with the same variables, for symbols.
  const ChartPtr& chart() const { return chart_; }

  UEAElement one() const;
  UEAElement generator(std::size_t i) const;
  UEAElement from_vector(const Vector& v) const;
  UEAElement monomial(const Exponents& e, const Rational& c = 1) const;

  /// x_k * u in normal form.
  UEAElement left_multiply(std::size_t k, const UEAElement& u) const;
  UEAElement multiply(const UEAElement& u, const UEAElement& v) const;
  UEAElement commutator(const UEAElement& u, const UEAElement& v) const;

  int monomial_degree(const Exponents& e) const;
  FilteredDegree kazhdan_degree(const UEAElement& u) const;
  std::size_t standard_degree(const Exponents& e) const;

  bool memoized() const { return memo_ != nullptr; }
  std::size_t memo_size() const;

 private:
  UEAElement left_multiply_monomial(std::size_t k, const Exponents& m) const;
  UEAElement compute_left_multiply(std::size_t k, const Exponents& m) const;

  struct Memo {
    mutable std::shared_mutex mutex;
    std::unordered_map<Exponents, UEAElement, ExponentsHash> table;
  };

  std::shared_ptr<const LieAlgebra> g_;
  std::vector<int> weights_;
  ChartPtr chart_;
  std::unique_ptr<Memo> memo_;
};

/// Degree-n part of u read as a commutative polynomial on the chart of the
/// algebra. Throws DegreeTooLow when u has degree above n.
KazhdanPolynomial symbol(const PbwAlgebra& U, const UEAElement& u, int n);

/// Omega = sum_ij (K^-1)_ij x_i x_j for the Killing matrix K; centrality is
/// verified (InternalError otherwise).
UEAElement casimir(const PbwAlgebra& U);

std::string format_element(const PbwAlgebra& U, const UEAElement& u);

}  // namespace walg
