#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace legendra {

enum class ErrorKind {
  SyntaxError,
  UnbalancedWord,
  DanglingPort,
  OrientationConflict,
  MultiComponent,
  NotApplicable,
  NotOnceOver,
  SearchExhausted,
  UnsupportedMap,
  UnknownBuiltin,
};

std::string_view to_string(ErrorKind kind);

// Every failure the library reports. Line and column are 1-based and zero
// when the error does not originate from DSL text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, int line = 0, int column = 0);

  ErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  ErrorKind kind_;
  int line_;
  int column_;
};

}  // namespace legendra
