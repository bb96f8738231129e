#ifndef DOMINIUM_ERRORS_HPP
#define DOMINIUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dominium {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of a construction or solver was not met.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The requested parameter has no value on this graph, e.g. k-tuple
/// domination with k > delta + 1.
class ParameterUndefined : public Error {
 public:
  using Error::Error;
};

}  // namespace dominium

#endif  // DOMINIUM_ERRORS_HPP
