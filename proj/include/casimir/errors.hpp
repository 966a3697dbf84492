#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

enum class ErrorKind {
  InvalidArgument,
  SymbolicModel,
  NonPassiveModel,
  NonConvergent,
  DivergentIntegrand,
  SplitUndefined,
  SingularPhase,
  Divergence,
  Unsupported,
  Config,
};

const char* to_string(ErrorKind kind);

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Schema or validation failure while reading a configuration document.
/// `pointer` is the JSON pointer of the offending value.
class ConfigError : public Error {
 public:
  ConfigError(std::string pointer, const std::string& message)
      : Error(ErrorKind::Config, pointer + ": " + message),
        pointer_(std::move(pointer)) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorKind::InvalidArgument, what);
}

}  // namespace casimir
