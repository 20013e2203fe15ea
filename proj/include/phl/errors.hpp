#pragma once

#include <stdexcept>
#include <string>

namespace phl {

/// Argument outside the documented domain of an operation.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact search refused because the instance exceeds its size guard.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input cannot carry the requested structure (divisibility, missing fill, ...).
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list or configuration text.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A postcondition the library guarantees did not hold. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace phl

#define PHL_ENSURE(cond, msg)                                               \
  do {                                                                      \
    if (!(cond)) throw ::phl::InternalError(std::string(__FILE__) + ":" +   \
                                            std::to_string(__LINE__) + ": " + \
                                            (msg));                         \
  } while (false)
