#pragma once

#include <stdexcept>
#include <string>

namespace dreg {

enum class ErrorKind { Usage, Resource, Math };

// Base of every error raised by the library. `code` is a stable machine
// readable tag (e.g. "NO_RATIONAL_POINT"), `what()` the human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& message)
      : Error(ErrorKind::Usage, "USAGE", message) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& message)
      : Error(ErrorKind::Resource, "RESOURCE", message) {}
};

class MathError : public Error {
 public:
  MathError(std::string code, const std::string& message)
      : Error(ErrorKind::Math, std::move(code), message) {}
};

}  // namespace dreg
