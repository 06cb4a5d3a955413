#pragma once

// Reference computations that share no code with the library beyond the
// Rational type: matrix-unit realizations of sl_n, a naive word-rewriting
// straightener, and brute-force Hilbert counts.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using Mat = std::vector<std::vector<Q>>;

inline Mat zero(std::size_t n) { return Mat(n, std::vector<Q>(n, Q(0))); }

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c = zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Mat comm(const Mat& a, const Mat& b) {
  Mat x = mul(a, b), y = mul(b, a);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) x[i][j] -= y[i][j];
  return x;
}

inline Q trace(const Mat& a) {
  Q t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

/// Matrix units in the order E_ij (i != j, row-major), then E_ii - E_{i+1,i+1}.
struct SlnMatrices {
  std::size_t n = 0;
  std::vector<std::string> labels;
  std::vector<Mat> basis;

  explicit SlnMatrices(std::size_t n_) : n(n_) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) {
          Mat m = zero(n);
          m[i][j] = 1;
          basis.push_back(m);
          labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Mat m = zero(n);
      m[i][i] = 1;
      m[i + 1][i + 1] = -1;
      basis.push_back(m);
      labels.push_back("H" + std::to_string(i + 1));
    }
  }

  std::size_t dim() const { return basis.size(); }

  /// Coordinates of a traceless matrix.
  std::vector<Q> coords(const Mat& m) const {
    std::vector<Q> c;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) c.push_back(m[i][j]);
    Q run = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      run += m[i][i];
      c.push_back(run);
    }
    return c;
  }

  Mat matrix(const std::vector<Q>& c) const {
    Mat m = zero(n);
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) m[i][j] += c[k] * basis[k][i][j];
    return m;
  }

  std::vector<Q> bracket(std::size_t i, std::size_t j) const {
    return coords(comm(basis[i], basis[j]));
  }

  /// trace(xy)
  Q trace_form(const std::vector<Q>& x, const std::vector<Q>& y) const {
    return trace(mul(matrix(x), matrix(y)));
  }

  /// trace(ad x ad y) with ad computed from matrix commutators.
  Q killing(std::size_t a, std::size_t b) const {
    Q t = 0;
    for (std::size_t k = 0; k < dim(); ++k) {
      const auto inner = bracket(b, k);
      const auto outer = coords(comm(basis[a], matrix(inner)));
      t += outer[k];
    }
    return t;
  }
};

/// Words in the generators with rational coefficients.
using Word = std::vector<std::size_t>;
using WordSum = std::map<Word, Q>;

using BracketFn = std::function<std::vector<std::pair<std::size_t, Q>>(std::size_t, std::size_t)>;

inline void add(WordSum& s, const Word& w, const Q& c) {
  if (c == 0) return;
  auto& v = s[w];
  v += c;
  if (v == 0) s.erase(w);
}

/// Rewrites x_a x_b -> x_b x_a + [x_a, x_b] at a descent (a > b) until every
/// word is nondecreasing. `leftmost` picks the first descent, otherwise the
/// last; the two strategies must agree.
inline WordSum straighten(WordSum s, const BracketFn& bracket, bool leftmost) {
  WordSum done;
  while (!s.empty()) {
    auto it = s.begin();
    Word w = it->first;
    Q c = it->second;
    s.erase(it);
    long pos = -1;
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
      if (w[p] > w[p + 1]) {
        pos = static_cast<long>(p);
        if (leftmost) break;
      }
    if (pos < 0) {
      add(done, w, c);
      continue;
    }
    const std::size_t p = static_cast<std::size_t>(pos);
    Word swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    add(s, swapped, c);
    for (const auto& [k, v] : bracket(w[p], w[p + 1])) {
      Word shorter(w.begin(), w.begin() + static_cast<long>(p));
      shorter.push_back(k);
      shorter.insert(shorter.end(), w.begin() + static_cast<long>(p) + 2, w.end());
      add(s, shorter, c * v);
    }
  }
  return done;
}

/// Sorted word -> exponent vector of length d.
inline std::vector<std::uint16_t> exponents(const Word& w, std::size_t d) {
  std::vector<std::uint16_t> e(d, 0);
  for (auto x : w) ++e[x];
  return e;
}

/// Number of exponent tuples of each weighted degree, by enumeration.
inline std::vector<std::size_t> hilbert_bruteforce(const std::vector<int>& degrees, int n_max) {
  std::vector<std::size_t> out(static_cast<std::size_t>(n_max) + 1, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int used) {
    if (k == degrees.size()) {
      ++out[static_cast<std::size_t>(used)];
      return;
    }
    for (int u = used; u <= n_max; u += degrees[k]) rec(k + 1, u);
  };
  rec(0, 0);
  return out;
}

/// Power-series coefficients of prod 1/(1 - t^d) by repeated multiplication.
inline std::vector<std::size_t> series_product(const std::vector<int>& degrees, int n_max) {
  std::vector<std::size_t> s(static_cast<std::size_t>(n_max) + 1, 0);
  s[0] = 1;
  for (int d : degrees) {
    std::vector<std::size_t> next(s.size(), 0);
    for (int i = 0; i <= n_max; ++i)
      for (int j = i; j <= n_max; j += d) next[static_cast<std::size_t>(j)] += s[static_cast<std::size_t>(i)];
    s = next;
  }
  return s;
}

inline Q random_rational(std::mt19937_64& rng, int num = 5, int den = 4) {
  std::uniform_int_distribution<int> a(-num, num), b(1, den);
  Q q(a(rng), b(rng));
  q.canonicalize();
  return q;
}

}  // namespace oracle
