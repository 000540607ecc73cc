#pragma once

#include <stdexcept>
#include <string>

namespace peakset {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument or malformed input value.
class InputError : public Error {
public:
  explicit InputError(const std::string& what) : Error(what) {}
};

// Textual input rejected at a specific line.
class ParseError : public InputError {
public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

// Request refused because it exceeds a configured or hard resource bound.
class ResourceLimitError : public Error {
public:
  explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

}  // namespace peakset
