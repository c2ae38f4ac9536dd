#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordpat {

enum class ErrorCode {
  Ok = 0,
  MalformedLine,
  VertexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  ConflictingPair,
  InvalidArgument,
  SizeCapExceeded,
  WidthCapExceeded,
  PreconditionViolated,
  InvalidTree,
  Io,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Input text rejected by one of the parsers. `line()` is 1-based, 0 when
/// the error is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ordpat
