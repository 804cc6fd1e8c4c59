#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vknot {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text: bad token, bad polynomial term, bad transcript line.
/// `column` is 1-based and 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t column)
      : Error(message), column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// A word/sign combination that violates the Gauss diagram invariants.
class DiagramError : public Error {
 public:
  using Error::Error;
};

/// A move site that does not apply to the diagram it is used on.
class MoveError : public Error {
 public:
  using Error::Error;
};

/// Requested enumeration size above the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An intersection number was requested for chords that are not linked.
class NotLinkedError : public Error {
 public:
  using Error::Error;
};

/// A constructed diagram failed its own recomputation check.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace vknot
