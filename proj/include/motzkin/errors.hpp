#pragma once

#include <stdexcept>
#include <string>

namespace motzkin {

// Malformed path or tree text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::invalid_argument(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A tree node with more children than its kind allows.
class OutdegreeError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Well-formed input that violates the object's invariant
// (e.g. a path that dips below zero passed where a Motzkin path is required).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Wrong number of parts handed to a composition.
class ArityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Exhaustive enumeration requested beyond the configured bound.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace motzkin
