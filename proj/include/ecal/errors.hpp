#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ecal {

// Anything caused by bad input: bad arguments, bad scenario files, bad tables.
// The CLI maps these to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// min == max in min-max scaling.
class DegenerateRange : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Zero standard deviation in normalization.
class DegenerateDeviation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DuplicateKeyError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class LookupError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Scenario document violates the schema. `path` is the dotted field path.
class SchemaError : public ValidationError {
 public:
  SchemaError(std::string path, const std::string& what)
      : ValidationError(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// A profile name in a scenario does not resolve to a built-in.
class ResolutionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// File could not be opened, read or written. The CLI maps these to exit code 2.
class IoError : public std::runtime_error {
 public:
  IoError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace ecal
