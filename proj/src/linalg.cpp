#include "walg/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "walg/errors.hpp"

namespace walg {

namespace {

using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

// Scales a rational row to a primitive integer row.
IntRow to_primitive(const SparseRow& row) {
  mpz_class l = 1;
  for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  mpz_class g = 0;
  for (const auto& [c, v] : row) {
    mpz_class x = v.get_num() * (l / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    out.emplace_back(c, std::move(x));
  }
  if (g > 1)
    for (auto& kv : out) mpz_divexact(kv.second.get_mpz_t(), kv.second.get_mpz_t(), g.get_mpz_t());
  return out;
}

void make_primitive(IntRow& row) {
  mpz_class g = 0;
  for (const auto& kv : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), kv.second.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& kv : row) mpz_divexact(kv.second.get_mpz_t(), kv.second.get_mpz_t(), g.get_mpz_t());
}

// a*x - b*y on sorted integer rows.
IntRow combine(const mpz_class& a, const IntRow& x, const mpz_class& b,
               const IntRow& y) {
  IntRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      mpz_class v = a * x[i].second - b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// Turns echelon rows (distinct leading columns) into reduced form.
RowEchelon back_substitute(std::size_t cols, std::vector<IntRow> echelon) {
  std::sort(echelon.begin(), echelon.end(),
            [](const IntRow& a, const IntRow& b) { return a[0].first < b[0].first; });
  RowEchelon out;
  out.cols = cols;
  out.rows.resize(echelon.size());
  out.pivots.resize(echelon.size());
  std::vector<long> pivot_slot(cols, -1);
  for (std::size_t i = 0; i < echelon.size(); ++i) {
    out.pivots[i] = echelon[i][0].first;
    pivot_slot[out.pivots[i]] = static_cast<long>(i);
  }
  for (std::size_t ii = echelon.size(); ii-- > 0;) {
    const IntRow& src = echelon[ii];
    const Rational lead(src[0].second);
    SparseRow row;
    for (const auto& [c, v] : src) row.emplace_hint(row.end(), c, Rational(v) / lead);
    // Later rows are already reduced, so subtracting one of them leaves the
    // other pivot entries of this row untouched.
    std::vector<std::pair<std::size_t, Rational>> factors;
    for (auto it = std::next(row.begin()); it != row.end(); ++it)
      if (pivot_slot[it->first] >= 0) factors.emplace_back(it->first, it->second);
    for (const auto& [col, factor] : factors) {
      for (const auto& [c, v] : out.rows[static_cast<std::size_t>(pivot_slot[col])]) {
        auto [pos, inserted] = row.try_emplace(c, -factor * v);
        if (!inserted) {
          pos->second -= factor * v;
          if (pos->second == 0) row.erase(pos);
        }
      }
    }
    out.rows[ii] = std::move(row);
  }
  return out;
}

}  // namespace

RowEchelon reduced_row_echelon_sparse(const SparseMatrix& m) {
  std::vector<IntRow> work;
  work.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m.row(r).empty()) work.push_back(to_primitive(m.row(r)));
  // Sparse rows first keeps fill-in low; the reduced form does not depend on it.
  std::stable_sort(work.begin(), work.end(),
                   [](const IntRow& a, const IntRow& b) { return a.size() < b.size(); });

  std::vector<long> pivot_of(m.cols(), -1);
  std::vector<IntRow> pivots;
  for (auto& row : work) {
    std::size_t scan = 0;
    while (!row.empty()) {
      std::size_t k = scan;
      while (k < row.size() && pivot_of[row[k].first] < 0) ++k;
      if (k == row.size()) break;
      const IntRow& p = pivots[static_cast<std::size_t>(pivot_of[row[k].first])];
      const mpz_class a = p[0].second;
      const mpz_class b = row[k].second;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      row = combine(a / g, row, b / g, p);
      make_primitive(row);
      scan = k;  // entries before k are untouched and not pivot columns
    }
    if (row.empty()) continue;
    pivot_of[row[0].first] = static_cast<long>(pivots.size());
    pivots.push_back(std::move(row));
  }
  return back_substitute(m.cols(), std::move(pivots));
}

RowEchelon reduced_row_echelon_dense(const SparseMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (auto& [c, v] : to_primitive(m.row(r))) a[r][c] = v;

  // Bareiss: every division by the previous pivot is exact.
  mpz_class prev = 1;
  std::size_t rank = 0;
  std::vector<std::size_t> pivcols;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    const mpz_class& piv = a[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const mpz_class lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = piv * a[i][j] - lead * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = piv;
    pivcols.push_back(c);
    ++rank;
  }
  std::vector<IntRow> echelon;
  for (std::size_t r = 0; r < rank; ++r) {
    IntRow row;
    for (std::size_t c = pivcols[r]; c < cols; ++c)
      if (a[r][c] != 0) row.emplace_back(c, a[r][c]);
    make_primitive(row);
    echelon.push_back(std::move(row));
  }
  return back_substitute(cols, std::move(echelon));
}

RowEchelon reduced_row_echelon(const SparseMatrix& m,
                               const EliminationOptions& opts) {
  if (m.rows() <= opts.dense_threshold && m.cols() <= opts.dense_threshold)
    return reduced_row_echelon_dense(m);
  return reduced_row_echelon_sparse(m);
}

Subspace Subspace::from_echelon(const RowEchelon& e) {
  Subspace s(e.cols);
  s.pivots_ = e.pivots;
  s.basis_.reserve(e.rows.size());
  for (const auto& row : e.rows) {
    Vector v(e.cols);
    for (const auto& [c, x] : row) v[c] = x;
    s.basis_.push_back(std::move(v));
  }
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim,
                        const std::vector<Vector>& vectors) {
  SparseMatrix m(0, ambient_dim);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw DimensionMismatch("span: vector length");
    SparseRow row;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) row.emplace_hint(row.end(), i, v[i]);
    m.append_row(std::move(row));
  }
  return from_echelon(reduced_row_echelon(m));
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(unit_vector(ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("coordinates: length");
  Vector coords(basis_.size());
  Vector residual = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    coords[i] = residual[pivots_[i]];
    axpy(residual, -coords[i], basis_[i]);
  }
  if (!is_zero(residual)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vector& v) const {
  return coordinates(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("contains: ambient");
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

Subspace Subspace::annihilator() const {
  return kernel(SparseMatrix::from_dense(basis_, ambient_));
}

std::size_t rank(const SparseMatrix& m, const EliminationOptions& opts) {
  return reduced_row_echelon(m, opts).rank();
}

Subspace kernel(const SparseMatrix& m, const EliminationOptions& opts) {
  const RowEchelon e = reduced_row_echelon(m, opts);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vector v(m.cols());
    v[j] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      auto it = e.rows[i].find(j);
      if (it != e.rows[i].end()) v[e.pivots[i]] = -it->second;
    }
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), gens);
}

std::optional<Vector> solve(const SparseMatrix& m, const Vector& b,
                            const EliminationOptions& opts) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: rhs length");
  const std::size_t n = m.cols();
  SparseMatrix aug(0, n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseRow row = m.row(r);
    if (b[r] != 0) row.emplace(n, b[r]);
    aug.append_row(std::move(row));
  }
  const RowEchelon e = reduced_row_echelon(aug, opts);
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  Vector x(n);
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    auto it = e.rows[i].find(n);
    if (it != e.rows[i].end()) x[e.pivots[i]] = it->second;
  }
  if (m.apply(x) != b) throw InternalError("solve: substitution check failed");
  return x;
}

std::pair<Subspace, Subspace> sum_and_intersection(const Subspace& u,
                                                   const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw DimensionMismatch("sum_and_intersection: ambient dimensions differ");
  std::vector<Vector> all = u.basis();
  all.insert(all.end(), v.basis().begin(), v.basis().end());
  Subspace sum = Subspace::span(u.ambient_dim(), all);

  std::vector<Vector> ann = u.annihilator().basis();
  const Subspace av = v.annihilator();
  ann.insert(ann.end(), av.basis().begin(), av.basis().end());
  Subspace meet = Subspace::span(u.ambient_dim(), ann).annihilator();
  if (sum.dim() + meet.dim() != u.dim() + v.dim())
    throw InternalError("sum_and_intersection: dimension formula violated");
  return {std::move(sum), std::move(meet)};
}

DenseMatrix inverse(const DenseMatrix& m) {
  const std::size_t n = m.size();
  SparseMatrix aug(0, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DimensionMismatch("inverse: not square");
    SparseRow row;
    for (std::size_t j = 0; j < n; ++j)
      if (m[i][j] != 0) row.emplace(j, m[i][j]);
    row.emplace(n + i, 1);
    aug.append_row(std::move(row));
  }
  const RowEchelon e = reduced_row_echelon(aug);
  if (e.rank() != n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw InvalidInput("inverse: singular matrix");
  auto inv = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [c, v] : e.rows[i])
      if (c >= n) inv[i][c - n] = v;
  return inv;
}

}  // namespace walg
