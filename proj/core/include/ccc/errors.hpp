#pragma once

#include <stdexcept>
#include <string>

namespace ccc {

// Base class of every user-facing failure raised by the kernel.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, int line_, int col_)
      : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
  int line;
  int col;
};

struct UnknownIdentifier : Error {
  using Error::Error;
};

struct TypeMismatch : Error {
  using Error::Error;
};

struct DuplicateName : Error {
  using Error::Error;
};

struct BadIndeterminateType : Error {
  using Error::Error;
};

struct NoIndeterminate : Error {
  using Error::Error;
};

struct MissingInterpretation : Error {
  using Error::Error;
};

struct ModelTooLarge : Error {
  using Error::Error;
};

// A broken internal invariant rather than bad input. The CLI maps this to
// exit code 3.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace ccc
