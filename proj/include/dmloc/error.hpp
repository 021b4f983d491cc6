#pragma once

#include <stdexcept>
#include <string>

namespace dmloc {

/// Failure of an exact computation. `code()` is a stable machine-readable tag
/// ("division_by_zero", "singular_matrix", ...) that the CLI reports verbatim.
class ComputationError : public std::runtime_error {
 public:
  ComputationError(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

  ParseError at(int line, int column_offset) const {
    return ParseError(what(), line, column_ + column_offset);
  }

 private:
  int line_;
  int column_;
};

}  // namespace dmloc
