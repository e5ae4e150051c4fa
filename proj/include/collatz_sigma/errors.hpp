#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace collatz_sigma {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// s = 1 (or 0) has no stopping time.
struct InvalidStart : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

struct MissingHistory : Error {
  explicit MissingHistory(std::size_t index)
      : Error("z_" + std::to_string(index) + " is not available in the series"),
        missing(index) {}
  std::size_t missing;
};

/// Broken internal invariant (a non-integral Diophantine solution, a stopping
/// time outside the guaranteed bound, a window scheduler that never accepts).
struct InternalError : Error {
  using Error::Error;
};

struct MalformedLine : Error {
  MalformedLine(std::size_t line_no, std::string text)
      : Error("malformed b-file line " + std::to_string(line_no) + ": '" + text + "'"),
        line(line_no),
        content(std::move(text)) {}
  std::size_t line;
  std::string content;
};

struct NonMonotonicIndex : Error {
  NonMonotonicIndex(std::size_t line_no, std::string text)
      : Error("b-file index not increasing at line " + std::to_string(line_no) + ": '" +
              text + "'"),
        line(line_no) {}
  std::size_t line;
};

}  // namespace collatz_sigma
