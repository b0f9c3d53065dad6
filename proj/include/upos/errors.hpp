#pragma once

#include <stdexcept>
#include <string>

namespace upos {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// The minimal recurrence has a repeated characteristic root.
class NotSimple : public Error {
 public:
  using Error::Error;
};

/// A configured degree, precision or search budget would be exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Sturm counting was asked about an interval whose endpoint is a root.
class EndpointRoot : public Error {
 public:
  using Error::Error;
};

}  // namespace upos
