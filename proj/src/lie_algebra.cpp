#include "walg/lie_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "walg/errors.hpp"

namespace walg {

namespace {

SparseVector to_sparse(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.emplace_back(i, v[i]);
  return s;
}

// [x_i, y] for y given by sparse coordinates, accumulated into out.
void accumulate_bracket(const std::vector<SparseVector>& table, std::size_t d,
                        std::size_t i, const SparseVector& y,
                        const Rational& scale, Vector& out) {
  for (const auto& [j, c] : y)
    for (const auto& [k, v] : table[i * d + j]) out[k] += scale * c * v;
}

}  // namespace

std::size_t LieAlgebra::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    throw InvalidInput("unknown basis label '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw DimensionMismatch("bracket: vector length");
  Vector out(dim());
  const SparseVector ys = to_sparse(y);
  for (std::size_t i = 0; i < dim(); ++i)
    if (x[i] != 0) accumulate_bracket(table_, dim(), i, ys, x[i], out);
  return out;
}

SparseMatrix LieAlgebra::ad(const Vector& x) const {
  SparseMatrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t k = 0; k < dim(); ++k)
      for (const auto& [r, v] : bracket_basis(i, k)) m.add(r, k, x[i] * v);
  }
  return m;
}

Rational LieAlgebra::killing(const Vector& x, const Vector& y) const {
  return dot(x, walg::apply(killing_, y));
}

std::vector<BracketEntry> LieAlgebra::bracket_table() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (!bracket_basis(i, j).empty())
        out.push_back({i, j, bracket_basis(i, j)});
  return out;
}

DenseMatrix killing_form(const LieAlgebra& g) {
  const std::size_t d = g.dim();
  std::vector<DenseMatrix> ads;
  ads.reserve(d);
  for (std::size_t i = 0; i < d; ++i) ads.push_back(g.ad(g.basis_vector(i)).to_dense());
  auto k = zero_matrix(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rational tr = 0;
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
          if (ads[i][a][b] != 0 && ads[j][b][a] != 0) tr += ads[i][a][b] * ads[j][b][a];
      k[i][j] = tr;
      k[j][i] = tr;
    }
  return k;
}

LieAlgebra make_lie_algebra(std::vector<std::string> labels,
                            const std::vector<BracketEntry>& table) {
  const std::size_t d = labels.size();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (labels[i] == labels[j])
        throw InvalidInput("duplicate basis label '" + labels[i] + "'");

  LieAlgebra g;
  g.labels_ = std::move(labels);
  g.table_.assign(d * d, {});
  std::vector<bool> seen(d * d, false);
  for (const auto& entry : table) {
    if (entry.i >= entry.j || entry.j >= d)
      throw InvalidInput("bracket table entries need i < j < dim");
    if (seen[entry.i * d + entry.j])
      throw InvalidInput("bracket [" + std::to_string(entry.i) + "," +
                         std::to_string(entry.j) + "] given twice");
    seen[entry.i * d + entry.j] = true;
    Vector v(d);
    for (const auto& [k, c] : entry.value) {
      if (k >= d) throw InvalidInput("bracket value index out of range");
      v[k] += c;
    }
    g.table_[entry.i * d + entry.j] = to_sparse(v);
    g.table_[entry.j * d + entry.i] = to_sparse(Rational(-1) * v);
  }

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        // [[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j]
        Vector s(d);
        for (const auto& [m, c] : g.bracket_basis(i, j))
          for (const auto& [r, v] : g.bracket_basis(m, k)) s[r] += c * v;
        for (const auto& [m, c] : g.bracket_basis(j, k))
          for (const auto& [r, v] : g.bracket_basis(m, i)) s[r] += c * v;
        for (const auto& [m, c] : g.bracket_basis(k, i))
          for (const auto& [r, v] : g.bracket_basis(m, j)) s[r] += c * v;
        if (!is_zero(s)) throw JacobiViolation(i, j, k);
      }

  g.killing_ = killing_form(g);
  if (rank(SparseMatrix::from_dense(g.killing_, d)) != d)
    throw DegenerateKillingForm();
  return g;
}

namespace {

std::string sln_label(std::size_t n, std::size_t i, std::size_t j) {
  if (n < 10) return "E" + std::to_string(i + 1) + std::to_string(j + 1);
  return "E" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

// Index of E_ij in make_sln(n), i != j.
std::size_t offdiag_index(std::size_t n, std::size_t i, std::size_t j) {
  return i * (n - 1) + (j < i ? j : j - 1);
}

}  // namespace

DenseMatrix sln_matrix(std::size_t n, const Vector& x) {
  if (x.size() != n * n - 1) throw DimensionMismatch("sln_matrix: length");
  auto m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m[i][j] = x[offdiag_index(n, i, j)];
  const std::size_t base = n * (n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    m[k][k] += x[base + k];
    m[k + 1][k + 1] -= x[base + k];
  }
  return m;
}

Vector sln_coordinates(std::size_t n, const DenseMatrix& m) {
  Vector x(n * n - 1);
  Rational trace = 0;
  for (std::size_t i = 0; i < n; ++i) {
    trace += m[i][i];
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) x[offdiag_index(n, i, j)] = m[i][j];
  }
  if (trace != 0) throw InvalidInput("sln_coordinates: matrix not traceless");
  // diag(d) = sum_k c_k H_k with c_k = d_1 + ... + d_k.
  Rational partial = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    partial += m[k][k];
    x[n * (n - 1) + k] = partial;
  }
  return x;
}

LieAlgebra make_sln(std::size_t n) {
  if (n < 2) throw InvalidInput("sl_n needs n >= 2");
  const std::size_t d = n * n - 1;
  std::vector<std::string> labels(d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) labels[offdiag_index(n, i, j)] = sln_label(n, i, j);
  for (std::size_t k = 0; k + 1 < n; ++k)
    labels[n * (n - 1) + k] = "H" + std::to_string(k + 1);

  std::vector<DenseMatrix> mats;
  mats.reserve(d);
  for (std::size_t a = 0; a < d; ++a) mats.push_back(sln_matrix(n, unit_vector(d, a)));
  std::vector<BracketEntry> table;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      DenseMatrix c = multiply(mats[a], mats[b]);
      const DenseMatrix ba = multiply(mats[b], mats[a]);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c[i][j] -= ba[i][j];
      SparseVector v = to_sparse(sln_coordinates(n, c));
      if (!v.empty()) table.push_back({a, b, std::move(v)});
    }
  return make_lie_algebra(std::move(labels), table);
}

LieAlgebra change_basis(const LieAlgebra& g, const std::vector<Vector>& basis,
                        std::vector<std::string> labels) {
  const std::size_t d = g.dim();
  if (basis.size() != d || labels.size() != d)
    throw DimensionMismatch("change_basis: need dim g vectors and labels");
  // Columns of `cols` are the new basis vectors.
  auto cols = zero_matrix(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i) cols[i][k] = basis[k].at(i);
  const DenseMatrix to_new = inverse(cols);
  std::vector<BracketEntry> table;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      SparseVector v = to_sparse(walg::apply(to_new, g.bracket(basis[a], basis[b])));
      if (!v.empty()) table.push_back({a, b, std::move(v)});
    }
  return make_lie_algebra(std::move(labels), table);
}

std::string format_vector(const LieAlgebra& g, const Vector& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational c = v[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (c < 0) c = -c;
    if (c != 1) os << c.get_str() << "*";
    os << g.label(i);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace walg
