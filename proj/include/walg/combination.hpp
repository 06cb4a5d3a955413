#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "walg/rational.hpp"

namespace walg {

/// Exponent vector of a monomial, one entry per variable.
using Exponents = std::vector<std::uint16_t>;

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : e) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

/// Finite rational linear combination of keys with no stored zeros. The Tag
/// parameter only separates otherwise identical types (PBW elements,
/// commutative polynomials, quotient-module elements).
template <class Tag, class Key = Exponents>
class LinearCombination {
 public:
  using Terms = std::map<Key, Rational>;

  LinearCombination() = default;

  static LinearCombination single(Key key, const Rational& coefficient = 1) {
    LinearCombination c;
    c.add_term(std::move(key), coefficient);
    return c;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Key& key, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const LinearCombination& other, const Rational& s) {
    if (s == 0) return;
    for (const auto& [k, c] : other.terms_) add_term(k, s * c);
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    add_scaled(o, 1);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    add_scaled(o, -1);
    return *this;
  }
  LinearCombination& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& kv : terms_) kv.second *= s;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a,
                                     const LinearCombination& b) {
    return a += b;
  }
  friend LinearCombination operator-(LinearCombination a,
                                     const LinearCombination& b) {
    return a -= b;
  }
  friend LinearCombination operator-(LinearCombination a) { return a *= -1; }
  friend LinearCombination operator*(const Rational& s, LinearCombination a) {
    return a *= s;
  }
  friend bool operator==(const LinearCombination& a,
                         const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

  /// Keeps only the terms for which pred(key) holds.
  template <class Pred>
  LinearCombination filter(Pred pred) const {
    LinearCombination r;
    for (const auto& [k, c] : terms_)
      if (pred(k)) r.terms_.emplace(k, c);
    return r;
  }

 private:
  Terms terms_;
};

}  // namespace walg
