#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace unital {

enum class ErrorCode {
  NotAUnital,
  ParseError,
  NotPrime,
  TooLarge,
  DivisionByZero,
  DoesNotDivide,
  NotConjugate,
  NotCollinear,
  WrongSize,
  NotDisjoint,
  SameBlock,
  NotAFullPoint,
  NoFullPoints,
  TooFewBlocks,
  NotA3Net,
  InvalidArgument,
  InvariantViolation,
  IoError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotAUnital: return "NotAUnital";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DoesNotDivide: return "DoesNotDivide";
    case ErrorCode::NotConjugate: return "NotConjugate";
    case ErrorCode::NotCollinear: return "NotCollinear";
    case ErrorCode::WrongSize: return "WrongSize";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::SameBlock: return "SameBlock";
    case ErrorCode::NotAFullPoint: return "NotAFullPoint";
    case ErrorCode::NoFullPoints: return "NoFullPoints";
    case ErrorCode::TooFewBlocks: return "TooFewBlocks";
    case ErrorCode::NotA3Net: return "NotA3Net";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

/// Single exception type for the library; the code is machine readable,
/// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with the 1-based line it occurred on (0 when not line oriented).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error(ErrorCode::ParseError,
              line == 0 ? reason : "line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

}  // namespace unital
