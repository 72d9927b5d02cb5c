#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpi {

enum class ErrorKind {
  RingMismatch,
  NotInvertible,
  RingTooSmall,
  SyntaxError,
  ZeroPolynomial,
  NotAUnit,
  InvalidTable,
  SpecSyntaxError,
  DescriptorMismatch,
  TooLarge,
  SamplingExhausted,
  OrderNotInvertible,
  NegativeExponent,
  DegreeTooLarge,
  NotAdmissible,
  MissingConstantTerm,
  AllNonconstantCancelled,
  NonPowerMonomial,
  PreconditionFailed,
  InvalidArgument,
  InternalError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `position` is set for parse errors
/// and points at the offending byte of the input text.
class Error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(ErrorKind kind, const std::string& message, std::size_t position = npos);

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::size_t position_;
};

}  // namespace lpi
