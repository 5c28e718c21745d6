#pragma once

#include <stdexcept>
#include <string>

namespace dgnet {

/// Base of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structural problem in a network or solver configuration.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A distribution-matrix column does not sum to one.
class ColumnSumError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A road endpoint is neither attached to a junction nor given a boundary mode.
class DanglingEndpointError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A road appears as incoming (or outgoing) at more than one junction.
class DuplicateAttachmentError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A fraction or density lies outside its admissible interval.
class RangeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Array or matrix shapes do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A kernel argument lies outside its mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The selected junction rule does not cover this junction shape.
class UnsupportedJunctionError : public Error {
 public:
  using Error::Error;
};

/// A distribution fraction of exactly 0 or 1 where the rule divides by it.
class DegenerateAlphaError : public Error {
 public:
  using Error::Error;
};

/// Quadrature order outside the implemented range.
class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

/// Polynomial degree outside the implemented range.
class UnsupportedDegreeError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Strict bounds mode: a cell average left [0, u_max] and the run was aborted.
class MassViolationError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failure while reading or writing run artifacts.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace dgnet
