#include "walg/rational.hpp"

#include <cctype>

#include "walg/errors.hpp"

namespace walg {

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s = trim(text);
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' ||
      den[0] == '+')
    throw InvalidInput("malformed rational '" + s + "'");
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw InvalidInput("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

void axpy(Vector& y, const Rational& a, const Vector& x) {
  if (y.size() != x.size()) throw DimensionMismatch("axpy: length mismatch");
  if (a == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y[i] += a * x[i];
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r = a;
  axpy(r, 1, b);
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r = a;
  axpy(r, -1, b);
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v.size());
  if (s == 0) return r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) r[i] = s * v[i];
  return r;
}

DenseMatrix zero_matrix(std::size_t rows, std::size_t cols) {
  return DenseMatrix(rows, Vector(cols));
}

DenseMatrix identity_matrix(std::size_t n) {
  auto m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = a[0].size();
  if (inner != b.size()) throw DimensionMismatch("matrix product: shape");
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  auto r = zero_matrix(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (b[k][j] != 0) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

Vector apply(const DenseMatrix& m, const Vector& v) {
  Vector r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

DenseMatrix transpose(const DenseMatrix& m) {
  if (m.empty()) return {};
  auto t = zero_matrix(m[0].size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

}  // namespace walg
