#pragma once

#include <stdexcept>
#include <string>

namespace qell {

/// Failure categories. Each maps onto one CLI exit code.
enum class ErrorKind {
  verification,  // 1
  parse,         // 2
  cap,           // 3
  schema,        // 4
  precondition,  // 5
  internal,      // character-theory or bookkeeping invariant broken
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::verification: return 1;
    case ErrorKind::parse: return 2;
    case ErrorKind::cap: return 3;
    case ErrorKind::schema: return 4;
    case ErrorKind::precondition: return 5;
    case ErrorKind::internal: return 1;
  }
  return 1;
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace qell
