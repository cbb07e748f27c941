#pragma once

#include <stdexcept>
#include <string>

namespace nilgeo {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a precondition (context mismatch, bad dimension, ...).
class UsageError : public Error {
public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
  using Error::Error;
};

/// A structural invariant of the input data fails (e.g. Jacobi identity).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// A subspace computation depends on whether an unconstrained parameter
/// vanishes; the positivity assumptions do not decide the pivot.
class IndeterminatePivot : public Error {
public:
  using Error::Error;
};

/// The lower central series stabilizes at a nonzero subspace.
class NotNilpotent : public Error {
public:
  using Error::Error;
};

/// Numeric evaluation outside the admissible domain (y = 0, ||X|| >= 1, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

}  // namespace nilgeo
