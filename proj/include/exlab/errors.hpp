#ifndef EXLAB_ERRORS_HPP
#define EXLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace exlab {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid arguments or family parameters (non-edge deletion, k >= n/2, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Malformed serialized input (graph6, edge-list JSON).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Input outside an operation's domain (disconnected graph, non-tree, path
// where the tree characterizations do not apply, non-outerplanar graph).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Search budget or size cap exceeded.  The CLI maps this to exit code 2.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace exlab

#endif
