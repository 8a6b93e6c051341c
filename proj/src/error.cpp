#include "legendra/error.hpp"

namespace legendra {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnbalancedWord: return "UnbalancedWord";
    case ErrorKind::DanglingPort: return "DanglingPort";
    case ErrorKind::OrientationConflict: return "OrientationConflict";
    case ErrorKind::MultiComponent: return "MultiComponent";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::NotOnceOver: return "NotOnceOver";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::UnsupportedMap: return "UnsupportedMap";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message, int line, int column) {
  std::string out(to_string(kind));
  if (line > 0) {
    out += " at " + std::to_string(line) + ":" + std::to_string(column);
  }
  out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, int line, int column)
    : std::runtime_error(decorate(kind, message, line, column)),
      kind_(kind),
      line_(line),
      column_(column) {}

}  // namespace legendra
