#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stainalign {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller handed us arguments that violate an operation's preconditions.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// A file on disk does not conform to its declared format.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t byte_offset)
      : Error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
        offset_(byte_offset) {}
  explicit FormatError(const std::string& what) : Error(what), offset_(0) {}

  std::size_t byte_offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Manifest rows or dataset contents are unusable for the requested task.
class DataError : public Error {
 public:
  using Error::Error;
};

// A computation produced non-finite values or failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace stainalign
