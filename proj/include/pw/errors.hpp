#pragma once

#include <stdexcept>
#include <string>

namespace pw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Order relation closes to something that is not antisymmetric.
class CycleError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// A PointSet was used with a poset other than the one it belongs to.
class BindingError : public Error {
 public:
  using Error::Error;
};

// A configured size bound would be exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class NotALatticeError : public Error {
 public:
  using Error::Error;
};

class DistributivityError : public Error {
 public:
  using Error::Error;
};

class UnknownPredicate : public Error {
 public:
  using Error::Error;
};

class NotFrameHom : public Error {
 public:
  using Error::Error;
};

class NotMonotone : public Error {
 public:
  using Error::Error;
};

class NormalizationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A round-trip map failed to be an isomorphism. `first`/`second` name the
// offending pair of elements (or points).
class IsoFailure : public Error {
 public:
  IsoFailure(const std::string& what, int first, int second)
      : Error(what), first(first), second(second) {}
  int first;
  int second;
};

}  // namespace pw
