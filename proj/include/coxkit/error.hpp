#pragma once

#include <stdexcept>
#include <string>

namespace coxkit {

// Domain and precondition violations. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parser diagnostics with a 1-based source location.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace coxkit
