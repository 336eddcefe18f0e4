#pragma once

#include <stdexcept>
#include <string>

namespace quartic {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (bad JSON shape, bad rational, duplicate id).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A configuration or generator that breaks a structural rule.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A required multiplicity is Unknown.
class InsufficientData : public Error {
 public:
  explicit InsufficientData(std::string coordinate)
      : Error("insufficient multiplicity data at " + coordinate),
        coordinate_(std::move(coordinate)) {}

  const std::string& coordinate() const noexcept { return coordinate_; }

 private:
  std::string coordinate_;
};

/// An operation was called outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace quartic
