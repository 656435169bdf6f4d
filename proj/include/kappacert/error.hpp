#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kappacert {

enum class ErrorKind {
  InvalidInput,
  DegenerateInput,
  Overflow,
  NonPrimeP,
  GcdViolation,
  DivisibilityViolation,
  DegenerateCurve,
  BadL,
  InternalInconsistency,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind so the
/// CLI can map it onto an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Internal inconsistencies indicate a bug, everything else bad input.
  bool is_internal() const noexcept {
    return kind_ == ErrorKind::InternalInconsistency;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void ensure(bool condition, const std::string& what) {
  if (!condition) fail(ErrorKind::InternalInconsistency, what);
}

}  // namespace kappacert
