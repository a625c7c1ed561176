#pragma once

#include <stdexcept>
#include <string>

namespace wkl {

// Error classes map onto the CLI exit-code contract:
// parse/validation -> 1, hypothesis/bound violated -> 2,
// extraction failed within horizon -> 3. Usage errors (bad requests
// against a valid tree) are reported as validation failures.
enum class ErrorKind {
  kParse = 1,
  kBound = 2,
  kExtract = 3,
  kUsage = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace wkl
