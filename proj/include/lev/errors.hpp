#pragma once

#include <stdexcept>
#include <string>

namespace lev {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad inputs: out-of-range parameters, malformed specs, inconsistent configs.
// The CLI maps these to exit code 2.
struct ValidationError : Error {
  using Error::Error;
};

// Leverage ratio requested with zero operator time in the denominator.
struct UndefinedLeverageError : Error {
  using Error::Error;
};

// Per-task ceiling requested for a task with no novel bits; the ratio is
// unbounded and callers must branch rather than receive a number.
struct UnboundedCeilingError : Error {
  using Error::Error;
};

// Exact solver invoked above its configured instance-size limit.
struct SizeLimitError : ValidationError {
  using ValidationError::ValidationError;
};

// Dependency graph contains a cycle.
struct CycleError : ValidationError {
  using ValidationError::ValidationError;
};

// File-level parse failure; message carries path/line/field diagnostics.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t line_no = 0)
      : Error(msg), line(line_no) {}
  std::size_t line;
};

// Malformed workflow trace; index of the offending event record.
struct TraceError : Error {
  TraceError(const std::string& msg, std::size_t index)
      : Error(msg), event_index(index) {}
  std::size_t event_index;
};

}  // namespace lev
