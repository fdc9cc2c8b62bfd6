#pragma once

#include <stdexcept>
#include <string>

namespace fraccauchy {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class DomainError : public Error {
public:
  using Error::Error;
};

class PoleError : public Error {
public:
  using Error::Error;
};

class OverflowError : public Error {
public:
  using Error::Error;
};

/// A series hit its term cap while the last term was still above tolerance.
class NonConvergence : public Error {
public:
  using Error::Error;
};

class SearchExhausted : public Error {
public:
  using Error::Error;
};

/// Eigenvalue or Newton iteration failed while building a quadrature rule.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

class ComplexRootsUnsupported : public Error {
public:
  using Error::Error;
};

class RepeatedRoots : public Error {
public:
  using Error::Error;
};

/// Polynomial root iteration did not settle.
class NoConvergence : public Error {
public:
  using Error::Error;
};

class SingularSystem : public Error {
public:
  using Error::Error;
};

class ZeroBasisValue : public Error {
public:
  using Error::Error;
};

}  // namespace fraccauchy
