#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "walg/combination.hpp"
#include "walg/rational.hpp"

namespace walg {

struct ChartVariable {
  std::string name;
  int weight = 0;       // ad h weight
  int degree = 0;       // Kazhdan degree
  std::size_t origin = 0;  // index in the basis the coordinate comes from
};

/// Ordered variable set of a polynomial ring.
struct PolyChart {
  std::string name;
  std::vector<ChartVariable> vars;

  std::size_t size() const { return vars.size(); }
  std::vector<int> degrees() const;
  friend bool operator==(const PolyChart& a, const PolyChart& b);
};

using ChartPtr = std::shared_ptr<const PolyChart>;

/// Variables whose Kazhdan degree is weight + 2.
ChartPtr make_kazhdan_chart(std::string name, const std::vector<std::string>& labels,
                            const std::vector<int>& weights);
/// Variables with explicit degrees (slice coordinates, auxiliary parameters).
ChartPtr make_chart(std::string name, std::vector<ChartVariable> vars);

struct PolyTag;
using PolyTerms = LinearCombination<PolyTag>;

/// Commutative polynomial over Q in the variables of a chart, graded by the
/// chart's variable degrees.
class KazhdanPolynomial {
 public:
  KazhdanPolynomial() = default;
  explicit KazhdanPolynomial(ChartPtr chart) : chart_(std::move(chart)) {}
  KazhdanPolynomial(ChartPtr chart, PolyTerms terms);

  static KazhdanPolynomial constant(ChartPtr chart, const Rational& c);
  static KazhdanPolynomial variable(ChartPtr chart, std::size_t i);
  static KazhdanPolynomial monomial(ChartPtr chart, Exponents e, const Rational& c = 1);

  const ChartPtr& chart() const { return chart_; }
  const PolyTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }
  Rational coefficient(const Exponents& e) const { return terms_.coefficient(e); }

  /// Kazhdan degree of a monomial (additive in the exponents).
  int monomial_degree(const Exponents& e) const;
  /// Maximum over terms; none for the zero polynomial.
  std::optional<int> degree() const;
  bool is_homogeneous() const;
  KazhdanPolynomial homogeneous_part(int n) const;

  KazhdanPolynomial derivative(std::size_t i) const;
  /// Replaces variable i by images[i], all on the target chart.
  KazhdanPolynomial substitute(const ChartPtr& target,
                               const std::vector<KazhdanPolynomial>& images) const;
  KazhdanPolynomial pow(unsigned k) const;

  KazhdanPolynomial& operator+=(const KazhdanPolynomial& o);
  KazhdanPolynomial& operator-=(const KazhdanPolynomial& o);
  KazhdanPolynomial& operator*=(const Rational& s);
  friend KazhdanPolynomial operator+(KazhdanPolynomial a, const KazhdanPolynomial& b) {
    return a += b;
  }
  friend KazhdanPolynomial operator-(KazhdanPolynomial a, const KazhdanPolynomial& b) {
    return a -= b;
  }
  friend KazhdanPolynomial operator-(KazhdanPolynomial a) { return a *= -1; }
  friend KazhdanPolynomial operator*(const Rational& s, KazhdanPolynomial a) {
    return a *= s;
  }
  friend KazhdanPolynomial operator*(const KazhdanPolynomial& a, const KazhdanPolynomial& b);
  friend bool operator==(const KazhdanPolynomial& a, const KazhdanPolynomial& b);

  std::string to_string() const;

 private:
  void require_same_chart(const KazhdanPolynomial& o) const;

  ChartPtr chart_;
  PolyTerms terms_;
};

bool same_chart(const ChartPtr& a, const ChartPtr& b);

/// Exponent vectors of Kazhdan degree exactly n (positive variable degrees),
/// in descending lexicographic order.
std::vector<Exponents> monomials_of_degree(const std::vector<int>& degrees, int n);

/// Coefficients of prod_k (1 - t^{d_k})^{-1} through t^N. Degrees must be
/// positive.
std::vector<std::size_t> hilbert_series(const std::vector<int>& degrees, int n_max);

}  // namespace walg
