#pragma once

#include <stdexcept>
#include <string>

namespace legmosaic {

/// Error category, mapped to process exit codes by the CLI
/// (domain -> 1, usage -> 2, resource -> 3).
enum class ErrorKind { domain, usage, resource };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

inline Error domain_error(std::string code, const std::string& message) {
  return Error(ErrorKind::domain, std::move(code), message);
}
inline Error usage_error(std::string code, const std::string& message) {
  return Error(ErrorKind::usage, std::move(code), message);
}
inline Error resource_error(std::string code, const std::string& message) {
  return Error(ErrorKind::resource, std::move(code), message);
}

}  // namespace legmosaic
