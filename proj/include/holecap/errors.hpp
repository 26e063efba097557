#pragma once

#include <stdexcept>
#include <string>

namespace holecap {

// Coarse error classes; the CLI maps these onto process exit codes.
enum class ErrorCode {
  Usage,            // malformed flags or input records
  Geometry,         // invalid curves, containment or intersection conflicts
  NearBoundary,     // evaluation target too close to a boundary
  NumericValidity,  // guard violations, degenerate systems, out-of-domain args
  Data,             // non-finite or inconsistent numeric data
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace holecap
