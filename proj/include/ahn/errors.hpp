#pragma once

#include <stdexcept>
#include <string>

namespace ahn {

/// Base class for every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: malformed arguments, non-finite data, dimension mismatch.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A least-squares solve or center update produced a non-finite value.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Raised when a molecule is asked to fit an empty subset.
class EmptySubsetError : public Error {
 public:
  using Error::Error;
};

class TrainingError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Model document is malformed or violates the expected layout.
class SchemaError : public Error {
 public:
  using Error::Error;
};

class VersionMismatchError : public Error {
 public:
  VersionMismatchError(std::string expected, std::string found)
      : Error("unsupported model format version '" + found + "' (this build reads '" + expected +
              "')"),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::string expected_;
  std::string found_;
};

/// Broken internal invariant. Indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ahn
