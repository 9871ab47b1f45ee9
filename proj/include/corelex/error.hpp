#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace corelex {

enum class ErrorKind {
  parse,
  unknown_tag,
  conflict,
  not_found,
  validation,
  domain,
  evaluation,
  io,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse error";
    case ErrorKind::unknown_tag: return "unknown tag";
    case ErrorKind::conflict: return "conflict";
    case ErrorKind::not_found: return "not found";
    case ErrorKind::validation: return "validation error";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::evaluation: return "evaluation error";
    case ErrorKind::io: return "I/O error";
  }
  return "error";
}

/// Library-wide exception. `line()` is 1-based and 0 when the error is not
/// tied to an input line.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::size_t line = 0)
      : std::runtime_error(message), kind_(kind), line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::size_t line_;
};

}  // namespace corelex
