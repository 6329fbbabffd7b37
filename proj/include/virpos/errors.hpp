#pragma once

#include <stdexcept>
#include <string>

namespace virpos {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidDegreeError : Error {
  InvalidDegreeError(int n, int r)
      : Error("invalid degree r=" + std::to_string(r) + " for side size n=" +
              std::to_string(n) + " (need 1 <= r <= n)") {}
};

// Configuration-model rejection sampling gave up. Usually means r is too
// close to n; switch-chain refinement is the intended fallback.
struct RejectionBudgetError : Error {
  using Error::Error;
};

struct SizeLimitError : Error {
  using Error::Error;
};

struct IndexError : Error {
  using Error::Error;
};

struct UndefinedLogError : Error {
  using Error::Error;
};

struct InsufficientSamplesError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, long line)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  long line;
};

}  // namespace virpos
