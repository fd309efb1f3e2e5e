#pragma once

#include <stdexcept>
#include <string>

namespace adjtor {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed inputs: variable-list mismatch, bad indices, broken invariants.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Input outside the domain of an operation (zero polynomial, non-SL2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Evaluation of a rational function at a zero of its denominator.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Iterative solver did not reach its tolerance.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, double worst_residual)
      : Error(what), worst_residual_(worst_residual) {}
  double worst_residual() const { return worst_residual_; }

 private:
  double worst_residual_;
};

/// The input sits on a non-generic locus (z = ±2, vanishing Jacobians,
/// boundary-parabolic characters, double zeros of the torsion polynomial).
class NonGenericError : public Error {
 public:
  using Error::Error;
};

}  // namespace adjtor
