#pragma once

#include <stdexcept>
#include <string>

namespace braidcalc {

enum class ErrorCode {
  StrandMismatch,
  IndexOutOfRange,
  PositionOutOfRange,
  NoMatch,
  InvalidSpec,
  NegativeWidth,
  ColumnOutOfRange,
  NonzeroFinalWidth,
  CapExceeded,
  Precondition,
  Parse,
  ContractViolation,
  Overflow,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse errors carry the 1-based line of the offending input (0 when the
// input is not line oriented, e.g. JSON).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ErrorCode::Parse, line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace braidcalc
