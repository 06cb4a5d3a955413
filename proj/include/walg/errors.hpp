#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace walg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised when an internal consistency check fails. These indicate a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

// liealg

class JacobiViolation : public Error {
 public:
  JacobiViolation(std::size_t i, std::size_t j, std::size_t k)
      : Error("Jacobi identity fails on basis triple (" + std::to_string(i) +
              ", " + std::to_string(j) + ", " + std::to_string(k) + ")"),
        i_(i), j_(j), k_(k) {}
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }
  std::size_t k() const { return k_; }

 private:
  std::size_t i_, j_, k_;
};

class DegenerateKillingForm : public Error {
 public:
  DegenerateKillingForm() : Error("Killing form is degenerate") {}
};

class NotNilpotent : public Error {
 public:
  using Error::Error;
};

class NoTripleFound : public Error {
 public:
  using Error::Error;
};

class NonIntegerEigenvalue : public Error {
 public:
  using Error::Error;
};

class NotIsotropic : public Error {
 public:
  using Error::Error;
};

class NotInsideGm1 : public Error {
 public:
  using Error::Error;
};

class DegenerateOmega : public Error {
 public:
  using Error::Error;
};

class DecompositionFailure : public Error {
 public:
  DecompositionFailure(const std::string& datum, std::size_t expected,
                       std::size_t actual)
      : Error("decomposition check failed: " + datum + " expected " +
              std::to_string(expected) + ", got " + std::to_string(actual)),
        datum_(datum), expected_(expected), actual_(actual) {}
  const std::string& datum() const { return datum_; }
  std::size_t expected() const { return expected_; }
  std::size_t actual() const { return actual_; }

 private:
  std::string datum_;
  std::size_t expected_, actual_;
};

// pbw_uea

class DegreeTooLow : public Error {
 public:
  using Error::Error;
};

// poisson_slice

class ChartMismatch : public Error {
 public:
  using Error::Error;
};

class NotNilpotentCoadjoint : public Error {
 public:
  using Error::Error;
};

class LiftFailure : public Error {
 public:
  using Error::Error;
};

// whittaker

/// Base for failures that carry the Kazhdan degree at which they occurred.
class DegreeError : public Error {
 public:
  DegreeError(const std::string& what, int degree)
      : Error(what + " (degree " + std::to_string(degree) + ")"),
        degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

class DegreeOverflow : public DegreeError {
 public:
  using DegreeError::DegreeError;
};

class TheoremFailure : public DegreeError {
 public:
  using DegreeError::DegreeError;
};

class ComparisonFailure : public DegreeError {
 public:
  using DegreeError::DegreeError;
};

class CenterCheckFailure : public Error {
 public:
  using Error::Error;
};

// cli

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace walg
