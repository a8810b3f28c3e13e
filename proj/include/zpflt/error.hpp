#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zpflt {

enum class ErrorKind {
  invalid_argument,
  not_squarefree,
  not_representable,
  inconclusive,
  internal_consistency,
  invalid_context,
  transport,
  parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace zpflt
