#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ldio {

/// Failure categories raised by the library. Every operation that can fail
/// throws ldio::Error carrying one of these codes.
enum class Errc {
  DivisionByZero,
  NegativeInput,
  BothZero,
  PoleAtPoint,
  TagMismatch,
  EvalAtZeroPole,
  ZeroPolynomial,
  NotOnCurve,
  ZeroV,
  LeadingNotSquare,
  Degenerate,
  DenominatorZero,
  ZeroT,
  InvalidParams,
  NonzeroRemainder,
  DegenerateConic,
  ZeroDivisor,
  VerificationFailed,
  EmptyOutput,
  BadShardIndex,
  ParseError,
  WrongVariable,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failure with the byte offset where it happened and the tokens that
/// would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected,
             const std::string& message);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace ldio
