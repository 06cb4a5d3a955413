#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace walg {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator, so zero is always 0/1.
using Rational = mpq_class;

/// Dense coordinate vector.
using Vector = std::vector<Rational>;

/// Dense row-major matrix, used only for small (dim g sized) data.
using DenseMatrix = std::vector<Vector>;

/// Parses "7", "-3", "2/5", "-10/4" (normalized to -5/2).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Rational dot(const Vector& a, const Vector& b);

/// y += a * x
void axpy(Vector& y, const Rational& a, const Vector& x);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);

DenseMatrix zero_matrix(std::size_t rows, std::size_t cols);
DenseMatrix identity_matrix(std::size_t n);
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
Vector apply(const DenseMatrix& m, const Vector& v);
DenseMatrix transpose(const DenseMatrix& m);

}  // namespace walg
