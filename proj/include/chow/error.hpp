#pragma once

#include <stdexcept>
#include <string>

namespace chow {

enum class ErrorKind {
  MalformedInput,
  Unsupported,
  InternalConsistency,
  Parse,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message, int line = 0, int column = 0)
      : std::runtime_error(message), kind_(kind), line_(line), column_(column) {}

  ErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

private:
  ErrorKind kind_;
  int line_;
  int column_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedInput: return "malformed-input";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::InternalConsistency: return "internal-consistency";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

[[noreturn]] inline void malformed(const std::string& msg) {
  throw Error(ErrorKind::MalformedInput, msg);
}

[[noreturn]] inline void unsupported(const std::string& msg) {
  throw Error(ErrorKind::Unsupported, msg);
}

[[noreturn]] inline void inconsistent(const std::string& msg) {
  throw Error(ErrorKind::InternalConsistency, msg);
}

}  // namespace chow
