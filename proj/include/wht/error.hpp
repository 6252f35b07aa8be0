#pragma once

#include <stdexcept>
#include <string>

namespace wht {

enum class ErrorCode {
  DivisionByZero,
  PoleAtPoint,
  BoundaryMismatch,
  InadmissibleTriple,
  SyntaxError,
  PositionOutOfRange,
  ColorMismatch,
  InadmissibleVertex,
  DuplicateDiskId,
  NotClosed,
  HasDiskGates,
  SingularBasis,
  NotSingleWormhole,
  NonLaurentResult,
  ColorOutOfRange,
  DenominatorZero,
  Internal,
};

// Domain error. `line` is 1-based when the error came from the DSL parser,
// 0 otherwise.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg
                                    : std::move(msg)),
        code_(code), line_(line) {}

  ErrorCode code() const { return code_; }
  int line() const { return line_; }

private:
  ErrorCode code_;
  int line_;
};

const char* error_code_name(ErrorCode c);

}  // namespace wht
