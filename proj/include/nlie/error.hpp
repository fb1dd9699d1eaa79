#pragma once

#include <stdexcept>
#include <string>

namespace nlie {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial, wedge, vector-field or weight text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Arity, variable-count or index mismatches between operands.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured resource bound (depth, module dimension) would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace nlie
