#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace collatz {

// Base type for everything thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// 3v+1 would leave the unsigned 64-bit range. Arithmetic never wraps silently.
class OverflowError : public Error {
public:
  explicit OverflowError(std::uint64_t v)
      : Error("overflow: 3*" + std::to_string(v) + "+1 exceeds 64 bits"), value(v) {}
  std::uint64_t value;
};

// An orbit or level did not terminate within the configured budget.
class BudgetExceededError : public Error {
public:
  BudgetExceededError(std::uint64_t start_value, std::uint64_t limit)
      : Error("budget exceeded: value " + std::to_string(start_value) +
              " did not finish within " + std::to_string(limit) + " steps"),
        start(start_value), budget(limit) {}
  std::uint64_t start;
  std::uint64_t budget;
};

class NotOddError : public Error {
public:
  explicit NotOddError(std::uint64_t v)
      : Error("odd_step: " + std::to_string(v) + " is even"), value(v) {}
  std::uint64_t value;
};

class OutOfRangeError : public Error {
public:
  using Error::Error;
};

// Element lists were not kept; rebuild with retain_elements.
class NotRetainedError : public Error {
public:
  using Error::Error;
};

class ParityError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(std::uint64_t line_number, const std::string& what)
      : Error("line " + std::to_string(line_number) + ": " + what), line(line_number) {}
  std::uint64_t line;
};

class SchemaError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace collatz
