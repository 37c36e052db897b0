#pragma once

#include <stdexcept>
#include <string>

namespace knotcone {

enum class ErrorCode {
  InvalidArgument,   // precondition violated by the caller
  DimensionMismatch,
  NotAChainMap,
  NotADifferential,  // non-square or d*d != 0
  Parse,
  Validation,
  Domain,            // mathematically inadmissible input (parity, range, ...)
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace knotcone
